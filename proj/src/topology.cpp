#include "csn/topology.hpp"

#include <algorithm>

#include "csn/error.hpp"

namespace csn {

namespace {

std::vector<Split> sorted_unique(std::vector<Split> splits, int max_label,
                                 bool rooted) {
  for (const Split& s : splits) {
    if (s.max_label() != max_label || s.rooted() != rooted) {
      throw Error(ErrorCode::TaxaMismatch, "split universe mismatch in topology");
    }
  }
  std::sort(splits.begin(), splits.end());
  auto dup = std::adjacent_find(splits.begin(), splits.end());
  if (dup != splits.end()) {
    throw Error(ErrorCode::DuplicateSplit, "split " + dup->to_string() + " repeated");
  }
  return splits;
}

}  // namespace

TreeTopology::TreeTopology(std::vector<Split> splits, int max_label, bool rooted)
    : splits_(sorted_unique(std::move(splits), max_label, rooted)),
      max_label_(max_label),
      rooted_(rooted) {
  for (std::size_t i = 0; i < splits_.size(); ++i) {
    for (std::size_t j = i + 1; j < splits_.size(); ++j) {
      if (!pairwise_compatible(splits_[i], splits_[j])) {
        throw Error(ErrorCode::IncompatibleSplits,
                    splits_[i].to_string() + " vs " + splits_[j].to_string());
      }
    }
  }
}

NetworkTopology::NetworkTopology(std::vector<Split> splits, int n, int bound)
    : splits_(sorted_unique(std::move(splits), n, false)),
      n_(n),
      witness_([&] {
        auto order = find_circular_order(splits_, n, bound);
        if (!order) {
          throw Error(ErrorCode::NotCircular,
                      "splits admit no common cyclic ordering");
        }
        return *order;
      }()) {}

bool is_binary(const TreeTopology& topology) {
  return static_cast<int>(topology.splits().size()) ==
         topology.label_count() - 3;
}

}  // namespace csn
