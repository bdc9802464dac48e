#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csn/network.hpp"
#include "csn/split.hpp"
#include "csn/topology.hpp"

namespace csn {

// Combinatorial model of a nodal curve with marked points: components are
// genus 0 vertices, intersections are edges (multi-edges allowed), marked
// points are legs. Intersections that are cut edges induce a bipartition of
// the marked points; edges on cycles carry none.
class DualGraphModel {
 public:
  DualGraphModel(int component_count,
                 std::vector<std::pair<int, int>> intersections,
                 std::vector<int> marked_component, int taxa_n);

  int component_count() const { return component_count_; }
  const std::vector<std::pair<int, int>>& intersections() const {
    return intersections_;
  }
  int taxa_n() const { return taxa_n_; }
  // Component carrying the marked point for each taxon 1..n (index 0 unused).
  const std::vector<int>& marked_component() const { return marked_component_; }
  int component_genus(int) const { return 0; }

  int marked_count(int component) const;
  int intersection_degree(int component) const;
  bool connected() const;

  // Per intersection, the split of marked points it induces; populated for
  // cut edges whose sides both carry at least two marked points.
  const std::vector<std::optional<Split>>& induced_partitions() const {
    return induced_partitions_;
  }

 private:
  int component_count_;
  std::vector<std::pair<int, int>> intersections_;
  std::vector<int> marked_component_;
  int taxa_n_;
  std::vector<std::optional<Split>> induced_partitions_;
};

// Canonical association: internal nodes become genus 0 components, internal
// edges become intersections, leaves become marked points.
DualGraphModel dual_from_network(const PlanarNetwork& net);

// Every component needs at least three special points (marked points plus
// intersection ends).
bool is_stable(const DualGraphModel& dual);

// Cycle rank of the component graph; with all components rational this is
// the curve's arithmetic genus.
int arithmetic_genus(const DualGraphModel& dual);

// Complex dimension n-3-k of the stratum matching a tree topology on n
// marked points with k internal edges.
int stratum_dimension(const TreeTopology& topology);

// True iff the realized tree has an internal vertex of valence > 3, i.e. the
// topology is degenerated rather than binary.
bool remains_stable_after_removal(const TreeTopology& topology);

// The two marking sets of the product decomposition attached to a boundary
// divisor: each side plus one attachment point.
struct MarkingSet {
  std::vector<int> labels;
  bool attachment = true;  // the glued point, rendered "*"
  std::string to_string() const;
};
std::pair<MarkingSet, MarkingSet> boundary_divisor_factors(const Split& split);

}  // namespace csn
