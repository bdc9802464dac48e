#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csn/split.hpp"

namespace csn {

// Buneman's four-intersection criterion: two splits are compatible iff at
// least one of the four pairwise side intersections is empty. A split system
// is tree-realizable exactly when all pairs are compatible.
bool pairwise_compatible(const Split& s1, const Split& s2);

// True iff every split has one side forming a contiguous arc of the order.
bool is_compatible_with_order(const std::vector<Split>& splits,
                              const CyclicOrder& order);

// True iff the given side mask occupies contiguous positions of the order.
bool arc_contiguous(std::uint32_t side_mask, const CyclicOrder& order);

// The lexicographically least cyclic order compatible with all splits, or
// nullopt when the system is not circular. Exhaustive over the (n-1)!/2
// canonical orders; throws EnumerationBoundExceeded above the bound.
std::optional<CyclicOrder> find_circular_order(
    const std::vector<Split>& splits, int n,
    int bound = kDefaultEnumerationBound);

// The n(n-3)/2 splits whose sides are arcs of the order, ascending.
std::vector<Split> splits_of_order(const CyclicOrder& order);

// Closed forms from the counting discussion: 2^(n-1)-n-1 splits on n taxa,
// (n-1)!/2 circular orders, and (2n-3)!! orthants of the rooted tree space.
std::uint64_t count_all_splits(int n);
std::uint64_t count_all_splits_binomial_sum(int n);  // the piecewise sum
std::uint64_t count_circular_orders(int n);
std::uint64_t count_bhv_orthants(int n);

}  // namespace csn
