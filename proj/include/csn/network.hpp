#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csn/split.hpp"

namespace csn {

enum class NodeKind { LeafEnd, Internal };

struct NetNode {
  NodeKind kind = NodeKind::Internal;
  int taxon = 0;  // meaningful for leaf-end nodes only
};

struct NetEdge {
  int node_a = -1;
  int node_b = -1;
  std::optional<Split> split;  // absent on external (leaf) edges
  double weight = 0.0;
};

enum class InsertionOrder { Given, Canonical };

// The path whose duplication inserts one split: anchors sit on the outer
// boundary walk, and the node sequence is a shortest path between them.
struct SplitPath {
  int anchor_p = -1;
  int anchor_q = -1;
  std::vector<int> nodes;  // anchor_p .. anchor_q
  std::vector<int> edges;  // one fewer than nodes
};

// A planar split network: leaves sit on the outer face in the cyclic order
// used for construction, every realized split is a class of equal-weight
// parallel edges, and removing a full class separates the leaves into the
// split's two sides. Values are immutable once built; add_split returns a
// fresh network.
class PlanarNetwork {
 public:
  static PlanarNetwork n_star(int n);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<NetNode>& nodes() const { return nodes_; }
  const std::vector<NetEdge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const CyclicOrder& order() const { return order_; }
  const std::vector<std::pair<Split, double>>& realized_splits() const {
    return splits_;
  }

  int n() const { return order_.n(); }
  int leaf_node(int taxon) const;
  int other_end(int edge_id, int node_id) const;
  int internal_node_count() const;
  int internal_edge_count() const;

  // Edges minus nodes plus one; the graph stays connected throughout.
  int cycle_rank() const;

  // Outer-face boundary walk as a closed node sequence starting at the leaf
  // of order()[0]; every leaf appears exactly once.
  std::vector<int> outer_walk() const;

  // Rotation-system sanity: face count satisfies Euler's formula and the
  // outer walk visits the leaves in the construction order.
  bool validate_embedding(std::string* why = nullptr) const;

 private:
  friend SplitPath split_path(const PlanarNetwork&, const Split&);
  friend PlanarNetwork add_split(const PlanarNetwork&, const Split&, double);
  friend PlanarNetwork build_network(const WeightedSplitSystem&,
                                     std::optional<CyclicOrder>, InsertionOrder,
                                     int);

  PlanarNetwork() : order_({1, 2, 3, 4}) {}

  std::vector<NetNode> nodes_;
  std::vector<NetEdge> edges_;
  std::vector<std::vector<int>> rotation_;  // per node, edge ids in cyclic order
  std::vector<int> leaf_node_;              // taxon -> node id (index 0 unused)
  CyclicOrder order_;
  std::vector<std::pair<Split, double>> splits_;  // insertion order
};

// Anchor and shortest-path computation for one split. The side that gets
// duplicated is the smaller one (ties favor the canonical A side); its arc
// start V_i and length k place anchor_p between V_{i-1} and V_i and anchor_q
// between V_{i+k-1} and V_{i+k}, with odd walks biased one step toward the
// duplicated side. Throws NotAnArc for splits foreign to the network's order.
SplitPath split_path(const PlanarNetwork& net, const Split& split);

// One round of the construction: duplicate the split path, move the
// duplicated side's attachments to the copy, and join originals to copies by
// a parallel class of the given weight.
PlanarNetwork add_split(const PlanarNetwork& net, const Split& split,
                        double weight);

// Folds add_split over the system, starting from an n-star. When no order is
// supplied the least compatible cyclic order is searched for.
PlanarNetwork build_network(const WeightedSplitSystem& system,
                            std::optional<CyclicOrder> order = std::nullopt,
                            InsertionOrder insertion = InsertionOrder::Given,
                            int bound = kDefaultEnumerationBound);

struct SplitClassCheck {
  Split split;
  bool equal_weights = false;
  bool no_shared_end_vertices = false;
  bool removal_disconnects_in_two = false;
  bool leaf_partition_matches = false;
  bool ok() const {
    return equal_weights && no_shared_end_vertices &&
           removal_disconnects_in_two && leaf_partition_matches;
  }
};

struct RealizationReport {
  bool connected = false;
  bool simple = false;  // no parallel duplicates between the same end vertices
  std::vector<SplitClassCheck> split_checks;
  bool ok() const {
    if (!connected || !simple) return false;
    for (const auto& c : split_checks) {
      if (!c.ok()) return false;
    }
    return true;
  }
};

// Checks the defining properties of every realized parallel class.
RealizationReport verify_realization(const PlanarNetwork& net);

}  // namespace csn
