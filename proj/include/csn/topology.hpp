#pragma once

#include <vector>

#include "csn/compatibility.hpp"
#include "csn/split.hpp"

namespace csn {

// An unweighted split set that is pairwise compatible (tree-realizable).
class TreeTopology {
 public:
  TreeTopology(std::vector<Split> splits, int max_label, bool rooted = false);

  int max_label() const { return max_label_; }
  bool rooted() const { return rooted_; }
  int label_count() const { return rooted_ ? max_label_ + 1 : max_label_; }
  const std::vector<Split>& splits() const { return splits_; }

  friend bool operator==(const TreeTopology& x, const TreeTopology& y) {
    return x.max_label_ == y.max_label_ && x.rooted_ == y.rooted_ &&
           x.splits_ == y.splits_;
  }

 private:
  std::vector<Split> splits_;  // ascending, duplicate-free
  int max_label_;
  bool rooted_;
};

// An unweighted split set compatible with some single cyclic ordering.
class NetworkTopology {
 public:
  NetworkTopology(std::vector<Split> splits, int n,
                  int bound = kDefaultEnumerationBound);

  int n() const { return n_; }
  const std::vector<Split>& splits() const { return splits_; }
  const CyclicOrder& witness_order() const { return witness_; }

  friend bool operator==(const NetworkTopology& x, const NetworkTopology& y) {
    return x.n_ == y.n_ && x.splits_ == y.splits_;
  }

 private:
  std::vector<Split> splits_;  // ascending, duplicate-free
  int n_;
  CyclicOrder witness_;
};

// True when the split count equals label_count - 3, the maximum a compatible
// system admits; in the rooted reading that is m - 2 splits on m leaves.
bool is_binary(const TreeTopology& topology);

}  // namespace csn
