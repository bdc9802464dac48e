#include "csn/split.hpp"

#include <algorithm>
#include <bit>

#include "csn/error.hpp"

namespace csn {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SideTooSmall: return "SideTooSmall";
    case ErrorCode::BadTaxon: return "BadTaxon";
    case ErrorCode::DuplicateSplit: return "DuplicateSplit";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::TaxaMismatch: return "TaxaMismatch";
    case ErrorCode::IncompatibleSplits: return "IncompatibleSplits";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::TooFewTaxa: return "TooFewTaxa";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::NotCircular: return "NotCircular";
    case ErrorCode::SideClassificationFailed: return "SideClassificationFailed";
    case ErrorCode::EmbeddingError: return "EmbeddingError";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooManySplits: return "TooManySplits";
    case ErrorCode::NotTreeShaped: return "NotTreeShaped";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateLeaf: return "DuplicateLeaf";
    case ErrorCode::EmptyTree: return "EmptyTree";
    case ErrorCode::WeightNotPositive: return "WeightNotPositive";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "UnknownError";
}

namespace {

std::vector<int> mask_to_labels(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i <= kMaxLabel + 1; ++i) {
    if ((mask >> i) & 1u) out.push_back(i);
  }
  return out;
}

std::string join_csv(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

int Split::size_a() const { return std::popcount(mask_a_); }
int Split::size_b() const { return std::popcount(mask_b()); }
std::vector<int> Split::side_a() const { return mask_to_labels(mask_a_); }
std::vector<int> Split::side_b() const { return mask_to_labels(mask_b()); }

std::string Split::to_string() const {
  return join_csv(side_a()) + "|" + join_csv(side_b());
}

bool operator<(const Split& x, const Split& y) {
  if (x.mask_full_ != y.mask_full_) return x.mask_full_ < y.mask_full_;
  // Lexicographic comparison of the sorted A sides. With a shared universe
  // this matches element-by-element comparison of the label sequences.
  std::uint32_t a = x.mask_a_;
  std::uint32_t b = y.mask_a_;
  if (a == b) return false;
  // Walk labels from the smallest; the first one present in exactly one side
  // decides: present-in-x means x's sequence is smaller there.
  std::uint32_t diff = a ^ b;
  int bit = std::countr_zero(diff);
  return (a >> bit) & 1u;
}

Split split_from_masks(std::uint32_t side_mask, std::uint32_t full_mask) {
  if ((side_mask & ~full_mask) != 0) {
    throw Error(ErrorCode::BadTaxon, "side contains labels outside the universe");
  }
  int total = std::popcount(full_mask);
  int in_side = std::popcount(side_mask);
  if (in_side < 2 || total - in_side < 2) {
    throw Error(ErrorCode::SideTooSmall,
                "both sides of a split need at least two labels");
  }
  std::uint32_t low_bit = full_mask & (~full_mask + 1u);
  Split s;
  s.mask_full_ = full_mask;
  s.mask_a_ = (side_mask & low_bit) ? side_mask : (full_mask & ~side_mask);
  s.label_count_ = total;
  s.max_label_ = 31 - std::countl_zero(full_mask);
  s.rooted_ = (full_mask & 1u) != 0;
  return s;
}

namespace {

std::uint32_t labels_to_mask(const std::vector<int>& labels, int lo, int hi) {
  std::uint32_t mask = 0;
  for (int t : labels) {
    if (t < lo || t > hi) {
      throw Error(ErrorCode::BadTaxon,
                  "label " + std::to_string(t) + " out of range " +
                      std::to_string(lo) + ".." + std::to_string(hi));
    }
    std::uint32_t bit = 1u << t;
    if (mask & bit) {
      throw Error(ErrorCode::BadTaxon, "duplicated label " + std::to_string(t));
    }
    mask |= bit;
  }
  return mask;
}

std::uint32_t full_mask_for(int lo, int hi) {
  std::uint32_t mask = 0;
  for (int t = lo; t <= hi; ++t) mask |= 1u << t;
  return mask;
}

}  // namespace

Split make_split(const std::vector<int>& side_a, int n) {
  if (n < 4 || n > kMaxLabel) {
    throw Error(ErrorCode::BadParameter, "taxa count must be in 4.." +
                                             std::to_string(kMaxLabel));
  }
  return split_from_masks(labels_to_mask(side_a, 1, n), full_mask_for(1, n));
}

Split make_rooted_split(const std::vector<int>& side_a, int leaf_count) {
  if (leaf_count < 3 || leaf_count > kMaxLabel) {
    throw Error(ErrorCode::BadParameter, "leaf count must be in 3.." +
                                             std::to_string(kMaxLabel));
  }
  return split_from_masks(labels_to_mask(side_a, 0, leaf_count),
                          full_mask_for(0, leaf_count));
}

std::vector<Split> all_splits(int max_label, bool rooted) {
  int lo = rooted ? 0 : 1;
  std::uint32_t full = full_mask_for(lo, max_label);
  int total = std::popcount(full);
  std::uint32_t low_bit = 1u << lo;
  std::vector<Split> out;
  // Each split appears once as the mask containing the lowest label.
  for (std::uint32_t m = 0; m <= full; ++m) {
    if ((m & ~full) || !(m & low_bit)) continue;
    int k = std::popcount(m);
    if (k < 2 || total - k < 2) continue;
    out.push_back(split_from_masks(m, full));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightedSplitSystem::WeightedSplitSystem(int max_label, bool rooted)
    : max_label_(max_label), rooted_(rooted) {
  int lo = rooted ? 0 : 1;
  if (max_label - lo + 1 < 4 || max_label > kMaxLabel) {
    throw Error(ErrorCode::TooFewTaxa,
                "split systems need at least four labels");
  }
}

bool WeightedSplitSystem::contains(const Split& s) const {
  for (const auto& e : entries_) {
    if (e.split == s) return true;
  }
  return false;
}

std::vector<Split> WeightedSplitSystem::splits() const {
  std::vector<Split> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.split);
  return out;
}

void WeightedSplitSystem::push(const Split& s, double weight) {
  if (s.max_label() != max_label_ || s.rooted() != rooted_) {
    throw Error(ErrorCode::TaxaMismatch, "split universe does not match system");
  }
  if (!(weight > 0.0)) {
    throw Error(ErrorCode::WeightNotPositive,
                "split weight must be strictly positive");
  }
  if (contains(s)) {
    throw Error(ErrorCode::DuplicateSplit, "split " + s.to_string() + " repeated");
  }
  entries_.push_back({s, weight});
}

WeightedSplitSystem collapse_zero_weights(const std::vector<WeightedEntry>& entries,
                                          int max_label, bool rooted) {
  WeightedSplitSystem out(max_label, rooted);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.weight < 0.0) {
      throw Error(ErrorCode::WeightNotPositive, "negative weight at entry " +
                                                    std::to_string(i));
    }
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[j].split == e.split) {
        throw Error(ErrorCode::DuplicateSplit,
                    "split " + e.split.to_string() + " repeated");
      }
    }
    if (e.weight > 0.0) out.push(e.split, e.weight);
  }
  return out;
}

WeightedSplitSystem projectivize(const WeightedSplitSystem& system) {
  if (system.empty()) {
    throw Error(ErrorCode::EmptySystem, "cannot projectivize an empty system");
  }
  double total = 0.0;
  for (const auto& e : system.entries()) total += e.weight;
  WeightedSplitSystem out(system.max_label(), system.rooted());
  for (const auto& e : system.entries()) out.push(e.split, e.weight / total);
  return out;
}

CyclicOrder::CyclicOrder(std::vector<int> labels) {
  int n = static_cast<int>(labels.size());
  if (n < 3) {
    throw Error(ErrorCode::TooFewTaxa, "cyclic orders need at least 3 taxa");
  }
  std::vector<bool> seen(n + 1, false);
  for (int t : labels) {
    if (t < 1 || t > n || seen[t]) {
      throw Error(ErrorCode::BadTaxon, "cyclic order must be a permutation of 1..n");
    }
    seen[t] = true;
  }
  // Least representative over all rotations of both directions.
  std::vector<int> best;
  std::vector<int> candidate(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (int start = 0; start < n; ++start) {
      for (int i = 0; i < n; ++i) {
        int idx = dir == 0 ? (start + i) % n : (start - i % n + n) % n;
        candidate[i] = labels[idx];
      }
      if (best.empty() || candidate < best) best = candidate;
    }
  }
  order_ = std::move(best);
}

int CyclicOrder::at(int pos) const {
  int n = this->n();
  return order_[((pos % n) + n) % n];
}

int CyclicOrder::position_of(int taxon) const {
  for (int i = 0; i < n(); ++i) {
    if (order_[i] == taxon) return i;
  }
  throw Error(ErrorCode::BadTaxon, "taxon " + std::to_string(taxon) +
                                       " not in cyclic order");
}

std::string CyclicOrder::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order_[i]);
  }
  return out;
}

std::vector<CyclicOrder> CyclicOrder::all_orders(int n, int bound) {
  if (n < 3) throw Error(ErrorCode::TooFewTaxa, "need n >= 3");
  if (n > bound) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "n = " + std::to_string(n) + " exceeds enumeration bound " +
                    std::to_string(bound));
  }
  // Canonical representatives are exactly (1, a2..an) with a2 < an, and
  // next_permutation over the tail emits them in ascending order.
  std::vector<int> tail(n - 1);
  for (int i = 0; i < n - 1; ++i) tail[i] = i + 2;
  std::vector<CyclicOrder> out;
  do {
    if (tail.front() > tail.back()) continue;
    std::vector<int> labels;
    labels.reserve(n);
    labels.push_back(1);
    labels.insert(labels.end(), tail.begin(), tail.end());
    out.emplace_back(std::move(labels));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

EvolutionaryPoint::EvolutionaryPoint(WeightedSplitSystem internal,
                                     std::vector<double> external)
    : internal_(std::move(internal)), external_(std::move(external)) {
  if (!internal_.rooted()) {
    throw Error(ErrorCode::BadParameter,
                "evolutionary points carry a rooted internal system");
  }
  if (static_cast<int>(external_.size()) != internal_.max_label()) {
    throw Error(ErrorCode::BadParameter,
                "one external weight per leaf is required");
  }
  for (double w : external_) {
    if (w < 0.0) {
      throw Error(ErrorCode::WeightNotPositive,
                  "external weights must be non-negative");
    }
  }
}

}  // namespace csn
