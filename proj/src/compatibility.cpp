#include "csn/compatibility.hpp"

#include <algorithm>
#include <set>

#include "csn/error.hpp"

namespace csn {

bool pairwise_compatible(const Split& s1, const Split& s2) {
  if (!s1.same_universe(s2)) {
    throw Error(ErrorCode::TaxaMismatch, "splits live on different taxa sets");
  }
  std::uint32_t a1 = s1.mask_a(), b1 = s1.mask_b();
  std::uint32_t a2 = s2.mask_a(), b2 = s2.mask_b();
  return (a1 & a2) == 0 || (a1 & b2) == 0 || (b1 & a2) == 0 || (b1 & b2) == 0;
}

bool arc_contiguous(std::uint32_t side_mask, const CyclicOrder& order) {
  int n = order.n();
  // An arc has exactly one circular block of members.
  int blocks = 0;
  for (int i = 0; i < n; ++i) {
    bool here = (side_mask >> order.at(i)) & 1u;
    bool prev = (side_mask >> order.at(i - 1)) & 1u;
    if (here && !prev) ++blocks;
  }
  return blocks == 1;
}

bool is_compatible_with_order(const std::vector<Split>& splits,
                              const CyclicOrder& order) {
  std::uint32_t expected_full = 0;
  for (int t : order.labels()) expected_full |= 1u << t;
  for (const Split& s : splits) {
    if (s.mask_full() != expected_full) {
      throw Error(ErrorCode::TaxaMismatch, "split universe does not match order");
    }
    if (!arc_contiguous(s.mask_a(), order)) return false;
  }
  return true;
}

std::optional<CyclicOrder> find_circular_order(const std::vector<Split>& splits,
                                               int n, int bound) {
  for (const CyclicOrder& order : CyclicOrder::all_orders(n, bound)) {
    if (is_compatible_with_order(splits, order)) return order;
  }
  return std::nullopt;
}

std::vector<Split> splits_of_order(const CyclicOrder& order) {
  int n = order.n();
  if (n < 4) throw Error(ErrorCode::TooFewTaxa, "need n >= 4");
  std::uint32_t full = 0;
  for (int t : order.labels()) full |= 1u << t;
  std::set<Split> out;
  for (int start = 0; start < n; ++start) {
    std::uint32_t mask = 1u << order.at(start);
    for (int len = 2; len <= n - 2; ++len) {
      mask |= 1u << order.at(start + len - 1);
      out.insert(split_from_masks(mask, full));
    }
  }
  return std::vector<Split>(out.begin(), out.end());
}

std::uint64_t count_all_splits(int n) {
  if (n < 4) throw Error(ErrorCode::TooFewTaxa, "need n >= 4");
  return (std::uint64_t{1} << (n - 1)) - static_cast<std::uint64_t>(n) - 1;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::uint64_t count_all_splits_binomial_sum(int n) {
  if (n < 4) throw Error(ErrorCode::TooFewTaxa, "need n >= 4");
  std::uint64_t total = 0;
  if (n % 2 == 1) {
    int k = (n - 1) / 2;
    for (int i = 2; i <= k; ++i) total += binomial(n, i);
  } else {
    int k = n / 2;
    for (int i = 2; i <= k - 1; ++i) total += binomial(n, i);
    total += binomial(n, k) / 2;
  }
  return total;
}

std::uint64_t count_circular_orders(int n) {
  if (n < 4) throw Error(ErrorCode::TooFewTaxa, "need n >= 4");
  std::uint64_t r = 1;
  for (int i = 2; i <= n - 1; ++i) r *= i;
  return r / 2;
}

std::uint64_t count_bhv_orthants(int n) {
  if (n < 3) throw Error(ErrorCode::TooFewTaxa, "need n >= 3");
  std::uint64_t r = 1;
  for (int i = 2 * n - 3; i >= 1; i -= 2) r *= i;
  return r;
}

}  // namespace csn
