#include "csn/dual_graph.hpp"

#include <deque>

#include "csn/error.hpp"

namespace csn {

namespace {

// Components reachable without the intersection at `skip`.
std::vector<int> reach_labels(int component_count,
                              const std::vector<std::pair<int, int>>& edges,
                              int skip) {
  std::vector<int> label(component_count, -1);
  int next = 0;
  for (int start = 0; start < component_count; ++start) {
    if (label[start] >= 0) continue;
    int id = next++;
    std::deque<int> queue{start};
    label[start] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (e == skip) continue;
        int v = -1;
        if (edges[e].first == u) v = edges[e].second;
        if (edges[e].second == u) v = edges[e].first;
        if (v >= 0 && label[v] < 0) {
          label[v] = id;
          queue.push_back(v);
        }
      }
    }
  }
  label.push_back(next);  // component count piggybacked at the end
  return label;
}

}  // namespace

DualGraphModel::DualGraphModel(int component_count,
                               std::vector<std::pair<int, int>> intersections,
                               std::vector<int> marked_component, int taxa_n)
    : component_count_(component_count),
      intersections_(std::move(intersections)),
      marked_component_(std::move(marked_component)),
      taxa_n_(taxa_n) {
  if (component_count_ <= 0) {
    throw Error(ErrorCode::BadParameter, "need at least one component");
  }
  if (static_cast<int>(marked_component_.size()) != taxa_n_ + 1) {
    throw Error(ErrorCode::BadParameter,
                "expected one marked component per taxon 1..n");
  }
  for (int t = 1; t <= taxa_n_; ++t) {
    if (marked_component_[t] < 0 || marked_component_[t] >= component_count_) {
      throw Error(ErrorCode::BadParameter, "marked point on unknown component");
    }
  }
  for (const auto& [a, b] : intersections_) {
    if (a < 0 || a >= component_count_ || b < 0 || b >= component_count_ ||
        a == b) {
      throw Error(ErrorCode::BadParameter, "bad intersection pair");
    }
  }

  induced_partitions_.assign(intersections_.size(), std::nullopt);
  for (int e = 0; e < static_cast<int>(intersections_.size()); ++e) {
    std::vector<int> label = reach_labels(component_count_, intersections_, e);
    int pieces = label.back();
    if (pieces != 2) continue;  // not a cut edge (or graph disconnected)
    std::vector<int> side;
    for (int t = 1; t <= taxa_n_; ++t) {
      if (label[marked_component_[t]] == label[intersections_[e].first]) {
        side.push_back(t);
      }
    }
    if (static_cast<int>(side.size()) >= 2 &&
        static_cast<int>(side.size()) <= taxa_n_ - 2) {
      induced_partitions_[e] = make_split(side, taxa_n_);
    }
  }
}

int DualGraphModel::marked_count(int component) const {
  int c = 0;
  for (int t = 1; t <= taxa_n_; ++t) {
    if (marked_component_[t] == component) ++c;
  }
  return c;
}

int DualGraphModel::intersection_degree(int component) const {
  int c = 0;
  for (const auto& [a, b] : intersections_) {
    if (a == component) ++c;
    if (b == component) ++c;
  }
  return c;
}

bool DualGraphModel::connected() const {
  return reach_labels(component_count_, intersections_, -1).back() == 1;
}

DualGraphModel dual_from_network(const PlanarNetwork& net) {
  std::vector<int> component_of(net.node_count(), -1);
  int components = 0;
  for (int v = 0; v < net.node_count(); ++v) {
    if (net.nodes()[v].kind == NodeKind::Internal) component_of[v] = components++;
  }
  std::vector<std::pair<int, int>> intersections;
  std::vector<int> marked(net.n() + 1, -1);
  for (const NetEdge& e : net.edges()) {
    if (e.split) {
      intersections.emplace_back(component_of[e.node_a], component_of[e.node_b]);
    } else {
      bool a_is_leaf = net.nodes()[e.node_a].kind == NodeKind::LeafEnd;
      int leaf = a_is_leaf ? e.node_a : e.node_b;
      int host = a_is_leaf ? e.node_b : e.node_a;
      marked[net.nodes()[leaf].taxon] = component_of[host];
    }
  }
  return DualGraphModel(components, std::move(intersections), std::move(marked),
                        net.n());
}

bool is_stable(const DualGraphModel& dual) {
  for (int c = 0; c < dual.component_count(); ++c) {
    if (dual.marked_count(c) + dual.intersection_degree(c) < 3) return false;
  }
  return true;
}

int arithmetic_genus(const DualGraphModel& dual) {
  if (!dual.connected()) {
    throw Error(ErrorCode::Disconnected, "dual graph must be connected");
  }
  return static_cast<int>(dual.intersections().size()) -
         dual.component_count() + 1;
}

int stratum_dimension(const TreeTopology& topology) {
  if (topology.rooted()) {
    throw Error(ErrorCode::BadParameter,
                "strata are indexed by unrooted marked-point topologies");
  }
  int n = topology.max_label();
  int k = static_cast<int>(topology.splits().size());
  if (k > n - 3) {
    throw Error(ErrorCode::TooManySplits,
                "a compatible system on n taxa has at most n-3 splits");
  }
  return n - 3 - k;
}

bool remains_stable_after_removal(const TreeTopology& topology) {
  return !is_binary(topology);
}

std::string MarkingSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  if (attachment) {
    if (!labels.empty()) out += ',';
    out += '*';
  }
  return out + "}";
}

std::pair<MarkingSet, MarkingSet> boundary_divisor_factors(const Split& split) {
  return {MarkingSet{split.side_a(), true}, MarkingSet{split.side_b(), true}};
}

}  // namespace csn
