#include "csn/complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "csn/compatibility.hpp"
#include "csn/error.hpp"

namespace csn {

SimplicialComplex::SimplicialComplex(std::vector<Split> vertices,
                                     std::vector<std::vector<int>> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  for (auto& f : facets_) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f) {
      if (v < 0 || v >= static_cast<int>(vertices_.size())) {
        throw Error(ErrorCode::BadIndex, "facet references unknown vertex");
      }
    }
  }
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  for (const auto& f : facets_) {
    for (const auto& g : facets_) {
      if (&f != &g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        throw Error(ErrorCode::BadParameter, "facets must form an antichain");
      }
    }
  }
}

bool SimplicialComplex::is_simplex(const std::vector<int>& vertex_indices) const {
  std::vector<int> s = vertex_indices;
  std::sort(s.begin(), s.end());
  for (const auto& f : facets_) {
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
  }
  return false;
}

std::vector<std::vector<int>> SimplicialComplex::all_simplices() const {
  std::set<std::vector<int>> seen;
  for (const auto& f : facets_) {
    int k = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i) {
        if ((mask >> i) & 1) s.push_back(f[i]);
      }
      seen.insert(s);
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> fv;
  for (const auto& s : all_simplices()) {
    std::size_t d = s.size() - 1;
    if (fv.size() <= d) fv.resize(d + 1, 0);
    ++fv[d];
  }
  return fv;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

namespace {

// Maximal cliques of the compatibility graph on the given splits.
SimplicialComplex compatibility_complex(std::vector<Split> vertices) {
  int v = static_cast<int>(vertices.size());
  std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      adj[i][j] = adj[j][i] = pairwise_compatible(vertices[i], vertices[j]);
    }
  }
  std::vector<std::vector<int>> facets;
  std::vector<int> current;
  // Bron-Kerbosch without pivoting; the graphs here are tiny.
  std::function<void(std::vector<int>, std::vector<int>)> expand =
      [&](std::vector<int> candidates, std::vector<int> excluded) {
        if (candidates.empty() && excluded.empty()) {
          facets.push_back(current);
          return;
        }
        std::vector<int> cands = candidates;
        for (int u : cands) {
          std::vector<int> next_cand, next_excl;
          for (int w : candidates) {
            if (w != u && adj[u][w]) next_cand.push_back(w);
          }
          for (int w : excluded) {
            if (adj[u][w]) next_excl.push_back(w);
          }
          current.push_back(u);
          expand(next_cand, next_excl);
          current.pop_back();
          candidates.erase(std::find(candidates.begin(), candidates.end(), u));
          excluded.push_back(u);
        }
      };
  std::vector<int> all(v);
  for (int i = 0; i < v; ++i) all[i] = i;
  expand(all, {});
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

}  // namespace

SimplicialComplex pbhv_complex(int m) {
  if (m < 3) throw Error(ErrorCode::TooFewTaxa, "need at least three leaves");
  return compatibility_complex(all_splits(m, /*rooted=*/true));
}

SimplicialComplex dual_intersection_complex(int n) {
  if (n < 4) throw Error(ErrorCode::TooFewTaxa, "need at least four marked points");
  return compatibility_complex(all_splits(n, /*rooted=*/false));
}

bool complexes_isomorphic(const SimplicialComplex& c1,
                          const SimplicialComplex& c2,
                          const std::function<Split(const Split&)>& vertex_map) {
  if (c1.vertices().size() != c2.vertices().size()) return false;
  std::map<Split, int> index2;
  for (int i = 0; i < static_cast<int>(c2.vertices().size()); ++i) {
    index2[c2.vertices()[i]] = i;
  }
  std::vector<int> image(c1.vertices().size());
  std::set<int> hit;
  for (int i = 0; i < static_cast<int>(c1.vertices().size()); ++i) {
    auto it = index2.find(vertex_map(c1.vertices()[i]));
    if (it == index2.end()) return false;
    image[i] = it->second;
    if (!hit.insert(it->second).second) return false;  // not injective
  }
  // Facets map to simplices forward; pulled-back facets are simplices too.
  for (const auto& f : c1.facets()) {
    std::vector<int> mapped;
    for (int v : f) mapped.push_back(image[v]);
    if (!c2.is_simplex(mapped)) return false;
  }
  std::vector<int> preimage(c2.vertices().size());
  for (int i = 0; i < static_cast<int>(image.size()); ++i) preimage[image[i]] = i;
  for (const auto& f : c2.facets()) {
    std::vector<int> mapped;
    for (int v : f) mapped.push_back(preimage[v]);
    if (!c1.is_simplex(mapped)) return false;
  }
  return true;
}

std::vector<Orthant> csn_orthants(int n, int bound) {
  if (n < 4) throw Error(ErrorCode::TooFewTaxa, "need n >= 4");
  std::vector<Orthant> out;
  for (const CyclicOrder& order : CyclicOrder::all_orders(n, bound)) {
    out.push_back({order, splits_of_order(order)});
  }
  return out;
}

CellDecomposition cells_of_m0n_real(int n, int bound) {
  if (n < 4) throw Error(ErrorCode::TooFewTaxa, "need n >= 4");
  CellDecomposition out;
  out.n = n;
  out.cells = CyclicOrder::all_orders(n, bound);
  std::map<CyclicOrder, int> index;
  for (int i = 0; i < static_cast<int>(out.cells.size()); ++i) {
    index[out.cells[i]] = i;
  }
  std::set<std::tuple<int, int, Split>> adjacency;
  for (int i = 0; i < static_cast<int>(out.cells.size()); ++i) {
    const CyclicOrder& cell = out.cells[i];
    for (const Split& face : splits_of_order(cell)) {
      // Reverse the arc the face cuts off.
      std::uint32_t arc = face.mask_a();
      std::vector<int> labels = cell.labels();
      std::vector<int> positions;
      for (int p = 0; p < n; ++p) {
        if ((arc >> cell.at(p)) & 1u) positions.push_back(p);
      }
      // Positions form a circular block; rotate so it is linear.
      int k = static_cast<int>(positions.size());
      int start = 0;
      for (int j = 0; j < k; ++j) {
        int prev = (positions[j] - 1 + n) % n;
        if (!((arc >> cell.at(prev)) & 1u)) start = positions[j];
      }
      std::vector<int> block(k);
      for (int j = 0; j < k; ++j) block[j] = (start + j) % n;
      for (int j = 0; j < k / 2; ++j) {
        std::swap(labels[block[j]], labels[block[k - 1 - j]]);
      }
      int neighbor = index.at(CyclicOrder(labels));
      if (neighbor == i) {
        throw Error(ErrorCode::BadParameter, "arc reversal fixed a cell");
      }
      adjacency.emplace(std::min(i, neighbor), std::max(i, neighbor), face);
    }
  }
  out.adjacency.assign(adjacency.begin(), adjacency.end());
  return out;
}

ExtendedReal circle_to_affine(double t) {
  if (t < 0.0 || t >= 2.0 * std::numbers::pi) {
    throw Error(ErrorCode::OutOfRange, "angle must lie in [0, 2*pi)");
  }
  if (t == std::numbers::pi) return {true, 0.0};
  return {false, std::tan(t / 2.0)};
}

}  // namespace csn
