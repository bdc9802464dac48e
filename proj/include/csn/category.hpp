#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csn/dual_graph.hpp"
#include "csn/split.hpp"

namespace csn {

// The combinatorial categories are all thin: objects carry a split set, and
// a (unique) morphism x -> y exists exactly when splits(y) is a subset of
// splits(x). Kinds with geometric content validate their split sets.
enum class ObjectKind { Tree, Network, Topology, DivisorSet, CurvePartition };

const char* object_kind_name(ObjectKind kind);

class CatObject {
 public:
  CatObject(ObjectKind kind, int n, std::vector<Split> splits,
            std::vector<double> weights = {});

  ObjectKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<Split>& splits() const { return splits_; }
  const std::vector<double>& weights() const { return weights_; }

  std::string to_string() const;

  friend bool operator==(const CatObject& x, const CatObject& y) {
    return x.kind_ == y.kind_ && x.n_ == y.n_ && x.splits_ == y.splits_;
  }
  friend bool operator<(const CatObject& x, const CatObject& y) {
    if (x.kind_ != y.kind_) return x.kind_ < y.kind_;
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.splits_ < y.splits_;
  }

 private:
  ObjectKind kind_;
  int n_;
  std::vector<Split> splits_;    // ascending, duplicate-free
  std::vector<double> weights_;  // aligned with splits_ when present
};

// Subset-of-splits morphism predicate; objects must share kind and taxa.
bool morphism_exists(const CatObject& x, const CatObject& y);

// Forgets the splits at the 1-based indices in `drop`.
CatObject project_topology(const CatObject& x, const std::set<int>& drop);
// The fusion maps on curve partitions are the same forgetting operation.
CatObject fuse_partitions(const CatObject& x, const std::set<int>& drop);

// Edge-shrinking homotopy: scales coordinate i (1-based) by 1-t.
std::vector<double> shrink_edge(const std::vector<double>& weights, int index,
                                double t);
std::vector<double> shrink_set(const std::vector<double>& weights,
                               const std::set<int>& indices, double t);

// Tree topology read off a tree-shaped stable curve: its splits are the
// partitions induced by the intersections.
CatObject functor_tree_topology(const DualGraphModel& curve);

// Weight-forgetting functor onto boundary-divisor sets, and its inverse on
// objects back to network topologies.
CatObject functor_network_divisors(const CatObject& network);
CatObject functor_divisors_network(const CatObject& divisors);

// The two partition-level functors of the tree/curve equivalence.
CatObject functor_topology_curve(const CatObject& topology);
CatObject functor_curve_topology(const CatObject& curve);

struct FiniteCategorySample {
  std::vector<CatObject> objects;
  std::function<bool(const CatObject&, const CatObject&)> hom_exists;
};

struct LawReport {
  bool identity_ok = true;
  bool composition_ok = true;
  std::size_t objects_checked = 0;
  std::size_t triples_checked = 0;
  std::string witness;  // first violation, if any
  bool ok() const { return identity_ok && composition_ok; }
};

// Identity morphisms, closure of composition over all triples, and the unit
// laws (which in a thin category reduce to the former two).
LawReport verify_category_laws(const FiniteCategorySample& sample);

enum class EquivalencePair { TreesCurves, NetworksDivisors };

struct EquivalenceReport {
  std::size_t left_objects = 0;
  std::size_t right_objects = 0;
  bool objects_bijective = false;
  bool hom_preserved = false;
  bool functor_laws_ok = false;
  std::string witness;
  bool ok() const { return objects_bijective && hom_preserved && functor_laws_ok; }
};

// Enumerates all objects on both sides of the chosen equivalence, checks the
// functors are mutually inverse on objects and preserve morphisms both ways,
// and that they respect identities and composition.
EquivalenceReport verify_equivalence(EquivalencePair pair, int n,
                                     int bound = kDefaultEnumerationBound);

// Enumerations backing the exhaustive suites.
std::vector<std::vector<Split>> all_compatible_split_sets(int n);
std::vector<std::vector<Split>> all_circular_split_sets(
    int n, int bound = kDefaultEnumerationBound);

}  // namespace csn
