#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csn/error.hpp"

namespace csn {

// Taxa are dense integer labels. An unrooted context uses {1..n}; a rooted
// context reserves label 0 for the root, giving {0..m} for a tree on m leaves.
// Enumeration-heavy operations refuse to run above this bound.
inline constexpr int kDefaultEnumerationBound = 12;
inline constexpr int kMaxLabel = 30;

// A bipartition A|B of the label universe with |A| >= 2 and |B| >= 2.
// Canonical form: side A is the side containing the smallest label, which is
// exactly the lexicographically smaller sorted sequence of the two sides.
class Split {
 public:
  Split() = default;

  int max_label() const { return max_label_; }
  bool rooted() const { return rooted_; }
  int label_count() const { return label_count_; }

  std::uint32_t mask_a() const { return mask_a_; }
  std::uint32_t mask_b() const { return mask_full_ & ~mask_a_; }
  std::uint32_t mask_full() const { return mask_full_; }

  int size_a() const;
  int size_b() const;
  std::vector<int> side_a() const;
  std::vector<int> side_b() const;

  bool side_a_contains(int label) const { return (mask_a_ >> label) & 1u; }
  bool same_universe(const Split& other) const {
    return mask_full_ == other.mask_full_;
  }

  std::string to_string() const;

  friend bool operator==(const Split& x, const Split& y) {
    return x.mask_full_ == y.mask_full_ && x.mask_a_ == y.mask_a_;
  }
  friend bool operator!=(const Split& x, const Split& y) { return !(x == y); }
  friend bool operator<(const Split& x, const Split& y);

 private:
  friend Split split_from_masks(std::uint32_t side_mask, std::uint32_t full_mask);

  std::uint32_t mask_a_ = 0;
  std::uint32_t mask_full_ = 0;
  int max_label_ = 0;
  int label_count_ = 0;
  bool rooted_ = false;
};

// Canonicalizes an arbitrary side mask over the given universe mask.
// Throws SideTooSmall / BadTaxon on malformed input.
Split split_from_masks(std::uint32_t side_mask, std::uint32_t full_mask);

// Split of the unrooted universe {1..n}.
Split make_split(const std::vector<int>& side_a, int n);

// Split of the rooted universe {0..leaf_count}; label 0 is the root.
Split make_rooted_split(const std::vector<int>& side_a, int leaf_count);

// All splits of the given universe, in ascending Split order.
std::vector<Split> all_splits(int max_label, bool rooted = false);

struct WeightedEntry {
  Split split;
  double weight = 0.0;
};

// Splits with strictly positive weights, in insertion order, no duplicates.
class WeightedSplitSystem {
 public:
  WeightedSplitSystem(int max_label, bool rooted = false);

  int max_label() const { return max_label_; }
  bool rooted() const { return rooted_; }
  int label_count() const { return rooted_ ? max_label_ + 1 : max_label_; }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<WeightedEntry>& entries() const { return entries_; }
  const WeightedEntry& entry(std::size_t i) const { return entries_[i]; }

  bool contains(const Split& s) const;
  std::vector<Split> splits() const;

  // Appends a positive-weight entry; rejects duplicates and bad universes.
  void push(const Split& s, double weight);

 private:
  int max_label_;
  bool rooted_;
  std::vector<WeightedEntry> entries_;
};

// Keeps exactly the positive-weight entries, order preserved. Zero weights
// are dropped (the collapsed edges); negative weights are rejected.
WeightedSplitSystem collapse_zero_weights(const std::vector<WeightedEntry>& entries,
                                          int max_label, bool rooted = false);

// Rescales weights to sum to 1. Splits and their ratios are unchanged.
WeightedSplitSystem projectivize(const WeightedSplitSystem& system);

// A cyclic arrangement of taxa 1..n up to rotation and reflection, stored as
// the lexicographically least representative among all 2n of them.
class CyclicOrder {
 public:
  explicit CyclicOrder(std::vector<int> labels);

  int n() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& labels() const { return order_; }
  int at(int pos) const;           // position taken modulo n
  int position_of(int taxon) const;

  std::string to_string() const;

  friend bool operator==(const CyclicOrder& x, const CyclicOrder& y) {
    return x.order_ == y.order_;
  }
  friend bool operator!=(const CyclicOrder& x, const CyclicOrder& y) {
    return !(x == y);
  }
  friend bool operator<(const CyclicOrder& x, const CyclicOrder& y) {
    return x.order_ < y.order_;
  }

  // All canonical cyclic orders on {1..n}, lexicographically ascending;
  // there are (n-1)!/2 of them.
  static std::vector<CyclicOrder> all_orders(int n, int bound = kDefaultEnumerationBound);

 private:
  std::vector<int> order_;
};

// A point of an evolutionary moduli space: a rooted internal split system on
// {0..leaf_count} plus one non-negative external weight per leaf.
class EvolutionaryPoint {
 public:
  EvolutionaryPoint(WeightedSplitSystem internal, std::vector<double> external);

  int leaf_count() const { return static_cast<int>(external_.size()); }
  const WeightedSplitSystem& internal() const { return internal_; }
  const std::vector<double>& external() const { return external_; }

 private:
  WeightedSplitSystem internal_;
  std::vector<double> external_;
};

}  // namespace csn
