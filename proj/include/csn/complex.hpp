#pragma once

#include <cstddef>
#include <functional>
#include <tuple>
#include <vector>

#include "csn/split.hpp"

namespace csn {

// Split-labeled abstract simplicial complex given by its facets (maximal
// simplices); every subset of a facet is a simplex.
class SimplicialComplex {
 public:
  SimplicialComplex(std::vector<Split> vertices,
                    std::vector<std::vector<int>> facets);

  const std::vector<Split>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }

  bool is_simplex(const std::vector<int>& vertex_indices) const;
  // All non-empty simplices, each a sorted index set, ordered by (size, lex).
  std::vector<std::vector<int>> all_simplices() const;
  // Entry d counts the d-dimensional simplices.
  std::vector<std::size_t> f_vector() const;
  int dimension() const;

 private:
  std::vector<Split> vertices_;
  std::vector<std::vector<int>> facets_;  // sorted index sets, an antichain
};

// Projectivized rooted tree space on m leaves (labels {0..m}, root 0):
// vertices are all splits, simplices the pairwise-compatible subsets, facets
// the binary topologies of size m-2.
SimplicialComplex pbhv_complex(int m);

// Dual intersection complex of the boundary of the n-marked moduli space:
// vertices are the boundary divisors (splits of [n]); divisors intersect iff
// their bipartitions are compatible, so facets have size n-3.
SimplicialComplex dual_intersection_complex(int n);

// True iff vertex_map is a bijection carrying simplices onto simplices in
// both directions.
bool complexes_isomorphic(const SimplicialComplex& c1,
                          const SimplicialComplex& c2,
                          const std::function<Split(const Split&)>& vertex_map);

struct Orthant {
  CyclicOrder order;
  std::vector<Split> splits;
};

// One orthant per canonical cyclic order, carrying its n(n-3)/2 splits.
std::vector<Orthant> csn_orthants(int n, int bound = kDefaultEnumerationBound);

// The top-dimensional cells of the real n-marked moduli space: one per
// canonical cyclic order; two cells share a codimension-1 face iff one order
// arises from the other by reversing a contiguous arc, and the face is
// labeled by the split that arc defines.
struct CellDecomposition {
  int n = 0;
  std::vector<CyclicOrder> cells;
  // (cell index, cell index, shared face split), indices ascending per pair.
  std::vector<std::tuple<int, int, Split>> adjacency;
};
CellDecomposition cells_of_m0n_real(int n, int bound = kDefaultEnumerationBound);

// A point of the real projective line: finite coordinate or the point at
// infinity.
struct ExtendedReal {
  bool infinite = false;
  double value = 0.0;
};

// The chart t -> tan(t/2) sending the circle coordinate to the affine line,
// with t = pi mapping to the point at infinity.
ExtendedReal circle_to_affine(double t);

}  // namespace csn
