#include "csn/network.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

#include "csn/compatibility.hpp"
#include "csn/error.hpp"

namespace csn {

namespace {

std::uint32_t full_taxa_mask(int n) {
  std::uint32_t full = 0;
  for (int t = 1; t <= n; ++t) full |= 1u << t;
  return full;
}

// The algorithm duplicates one side of the split; we take the smaller one,
// falling back to the canonical A side on ties.
std::uint32_t duplicated_side_mask(const Split& split) {
  return split.size_b() < split.size_a() ? split.mask_b() : split.mask_a();
}

std::vector<int> rotate_to(const std::vector<int>& rot, int edge_id) {
  auto it = std::find(rot.begin(), rot.end(), edge_id);
  if (it == rot.end()) {
    throw Error(ErrorCode::EmbeddingError, "edge missing from rotation list");
  }
  std::vector<int> out(it, rot.end());
  out.insert(out.end(), rot.begin(), it);
  return out;
}

}  // namespace

PlanarNetwork PlanarNetwork::n_star(int n) {
  if (n < 4) {
    throw Error(ErrorCode::TooFewTaxa, "networks need at least four taxa");
  }
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i + 1;

  PlanarNetwork net;
  net.order_ = CyclicOrder(identity);
  net.leaf_node_.assign(n + 1, -1);
  for (int t = 1; t <= n; ++t) {
    net.nodes_.push_back({NodeKind::LeafEnd, t});
    net.leaf_node_[t] = t - 1;
  }
  int hub = static_cast<int>(net.nodes_.size());
  net.nodes_.push_back({NodeKind::Internal, 0});
  net.rotation_.assign(net.nodes_.size(), {});
  for (int t = 1; t <= n; ++t) {
    int edge_id = static_cast<int>(net.edges_.size());
    net.edges_.push_back({t - 1, hub, std::nullopt, 0.0});
    net.rotation_[t - 1].push_back(edge_id);
    net.rotation_[hub].push_back(edge_id);
  }
  return net;
}

int PlanarNetwork::leaf_node(int taxon) const {
  if (taxon < 1 || taxon >= static_cast<int>(leaf_node_.size())) {
    throw Error(ErrorCode::BadTaxon, "taxon " + std::to_string(taxon));
  }
  return leaf_node_[taxon];
}

int PlanarNetwork::other_end(int edge_id, int node_id) const {
  const NetEdge& e = edges_[edge_id];
  return e.node_a == node_id ? e.node_b : e.node_a;
}

int PlanarNetwork::internal_node_count() const {
  int c = 0;
  for (const NetNode& v : nodes_) {
    if (v.kind == NodeKind::Internal) ++c;
  }
  return c;
}

int PlanarNetwork::internal_edge_count() const {
  int c = 0;
  for (const NetEdge& e : edges_) {
    if (e.split.has_value()) ++c;
  }
  return c;
}

int PlanarNetwork::cycle_rank() const {
  return edge_count() - node_count() + 1;
}

std::vector<int> PlanarNetwork::outer_walk() const {
  int start_node = leaf_node(order_.at(0));
  int start_edge = rotation_[start_node].front();
  std::vector<int> walk;
  int node = start_node;
  int edge = start_edge;
  do {
    walk.push_back(node);
    int next_node = other_end(edge, node);
    const auto& rot = rotate_to(rotation_[next_node], edge);
    edge = rot.size() > 1 ? rot[1] : rot[0];
    node = next_node;
  } while (!(node == start_node && edge == start_edge));
  return walk;
}

bool PlanarNetwork::validate_embedding(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  // Rotation lists must describe the incidence structure exactly.
  std::vector<int> degree(nodes_.size(), 0);
  for (int e = 0; e < edge_count(); ++e) {
    ++degree[edges_[e].node_a];
    ++degree[edges_[e].node_b];
  }
  for (int v = 0; v < node_count(); ++v) {
    if (static_cast<int>(rotation_[v].size()) != degree[v]) {
      return fail("rotation size mismatch at node " + std::to_string(v));
    }
    for (int e : rotation_[v]) {
      if (edges_[e].node_a != v && edges_[e].node_b != v) {
        return fail("rotation lists a non-incident edge");
      }
    }
  }
  // Count face orbits of the embedding; genus 0 means V - E + F = 2.
  int dart_count = 2 * edge_count();
  std::vector<char> seen(dart_count, 0);
  auto dart_id = [&](int node, int edge) {
    return 2 * edge + (edges_[edge].node_a == node ? 0 : 1);
  };
  int faces = 0;
  for (int e = 0; e < edge_count(); ++e) {
    for (int side = 0; side < 2; ++side) {
      int tail = side == 0 ? edges_[e].node_a : edges_[e].node_b;
      if (seen[dart_id(tail, e)]) continue;
      ++faces;
      int node = tail, edge = e;
      while (!seen[dart_id(node, edge)]) {
        seen[dart_id(node, edge)] = 1;
        int next_node = other_end(edge, node);
        const auto& rot = rotate_to(rotation_[next_node], edge);
        edge = rot.size() > 1 ? rot[1] : rot[0];
        node = next_node;
      }
    }
  }
  if (node_count() - edge_count() + faces != 2) {
    return fail("rotation system is not planar (V-E+F = " +
                std::to_string(node_count() - edge_count() + faces) + ")");
  }
  // Leaves must appear on the outer face in the construction order.
  std::vector<int> leaf_sequence;
  for (int v : outer_walk()) {
    if (nodes_[v].kind == NodeKind::LeafEnd) leaf_sequence.push_back(nodes_[v].taxon);
  }
  if (static_cast<int>(leaf_sequence.size()) != n()) {
    return fail("outer walk does not visit every leaf exactly once");
  }
  for (int i = 0; i < n(); ++i) {
    if (leaf_sequence[i] != order_.at(i)) {
      return fail("outer walk leaves out of cyclic order");
    }
  }
  return true;
}

namespace {

struct HullSegment {
  std::vector<int> nodes;  // leaf order[j] .. leaf order[j+1]
  std::vector<int> edges;  // one fewer; first and last are the leaf edges
};

// Outer-walk segments between consecutive leaves: segment j runs from the
// leaf order[j] to the leaf order[j+1], endpoints included.
std::vector<HullSegment> hull_segments(const PlanarNetwork& net) {
  int n = net.n();
  // Darts of the outer face, as in outer_walk but keeping the edges.
  std::vector<int> walk_nodes;
  std::vector<int> walk_edges;
  int start_node = net.leaf_node(net.order().at(0));
  int start_edge = net.rotation()[start_node].front();
  int node = start_node;
  int edge = start_edge;
  do {
    walk_nodes.push_back(node);
    walk_edges.push_back(edge);
    int next_node = net.other_end(edge, node);
    const auto& rot = rotate_to(net.rotation()[next_node], edge);
    edge = rot.size() > 1 ? rot[1] : rot[0];
    node = next_node;
  } while (!(node == start_node && edge == start_edge));

  std::vector<int> leaf_pos;
  for (std::size_t i = 0; i < walk_nodes.size(); ++i) {
    if (net.nodes()[walk_nodes[i]].kind == NodeKind::LeafEnd) {
      leaf_pos.push_back(static_cast<int>(i));
    }
  }
  if (static_cast<int>(leaf_pos.size()) != n) {
    throw Error(ErrorCode::EmbeddingError, "outer walk misses a leaf");
  }
  int len = static_cast<int>(walk_nodes.size());
  std::vector<HullSegment> segments(n);
  for (int j = 0; j < n; ++j) {
    int from = leaf_pos[j];
    int to = j + 1 < n ? leaf_pos[j + 1] : len;
    HullSegment& seg = segments[j];
    for (int i = from; i < to; ++i) {
      seg.nodes.push_back(walk_nodes[i]);
      seg.edges.push_back(walk_edges[i]);
    }
    seg.nodes.push_back(j + 1 < n ? walk_nodes[to] : walk_nodes[0]);
  }
  return segments;
}

struct ArcPlacement {
  std::uint32_t arc_mask = 0;
  int start = 0;  // position of V_i in the order
  int length = 0;
};

ArcPlacement locate_arc(const PlanarNetwork& net, const Split& split) {
  if (split.mask_full() != full_taxa_mask(net.n()) || split.rooted()) {
    throw Error(ErrorCode::TaxaMismatch, "split universe does not match network");
  }
  ArcPlacement arc;
  arc.arc_mask = duplicated_side_mask(split);
  arc.length = std::popcount(arc.arc_mask);
  const CyclicOrder& order = net.order();
  if (!arc_contiguous(arc.arc_mask, order)) {
    throw Error(ErrorCode::NotAnArc,
                "split " + split.to_string() + " is not an arc of order " +
                    order.to_string());
  }
  for (int i = 0; i < order.n(); ++i) {
    bool here = (arc.arc_mask >> order.at(i)) & 1u;
    bool prev = (arc.arc_mask >> order.at(i - 1)) & 1u;
    if (here && !prev) {
      arc.start = i;
      break;
    }
  }
  return arc;
}

// Arc of the class's side containing the leaf at `pos`, measured from that
// position: when `starting`, the side must be the arc {V_pos, V_pos+1, ...};
// otherwise the arc {..., V_pos-1, V_pos}. Returns its length.
int gap_arc_length(const Split& cls, const CyclicOrder& order, int pos,
                   bool starting) {
  int leaf = order.at(pos);
  std::uint32_t side = cls.side_a_contains(leaf) ? cls.mask_a() : cls.mask_b();
  int len = std::popcount(side);
  std::uint32_t expected = 0;
  for (int i = 0; i < len; ++i) {
    expected |= 1u << order.at(starting ? pos + i : pos - i);
  }
  if (expected != side) {
    throw Error(ErrorCode::EmbeddingError,
                "boundary edge of " + cls.to_string() +
                    " does not end in the expected gap");
  }
  return len;
}

// Anchor node for the new split inside one boundary gap. The classes crossing
// the gap cut off nested arcs anchored at the near leaf (V_i for the start
// gap, V_{i+k-1} for the end gap); the boundary walk meets them sorted by arc
// length, and the new class of arc length `new_len` slots between the longer
// arcs and the shorter ones.
int anchor_in_gap(const PlanarNetwork& net, const HullSegment& seg, int pos,
                  bool starting, int new_len) {
  int edge_total = static_cast<int>(seg.edges.size());
  int before = 0;
  int prev = -1;
  for (int j = 1; j <= edge_total - 2; ++j) {
    const NetEdge& e = net.edges()[seg.edges[j]];
    if (!e.split) {
      throw Error(ErrorCode::EmbeddingError, "unlabeled edge inside a gap");
    }
    int len = gap_arc_length(*e.split, net.order(), pos, starting);
    if (prev >= 0 && (starting ? len >= prev : len <= prev)) {
      throw Error(ErrorCode::EmbeddingError, "gap classes are not nested");
    }
    prev = len;
    if (starting ? len > new_len : len < new_len) ++before;
  }
  return seg.nodes[1 + before];
}

}  // namespace

SplitPath split_path(const PlanarNetwork& net, const Split& split) {
  ArcPlacement arc = locate_arc(net, split);
  int n = net.n();
  auto segments = hull_segments(net);

  // The duplicated side is the arc {V_i, ..., V_{i+k-1}}; its rung ends sit
  // in the gaps flanking the arc.
  const HullSegment& seg_p = segments[(arc.start - 1 + n) % n];
  int anchor_p = anchor_in_gap(net, seg_p, arc.start, true, arc.length);
  const HullSegment& seg_q = segments[(arc.start + arc.length - 1) % n];
  int anchor_q =
      anchor_in_gap(net, seg_q, arc.start + arc.length - 1, false, arc.length);

  SplitPath path;
  path.anchor_p = anchor_p;
  path.anchor_q = anchor_q;
  if (anchor_p == anchor_q) {
    path.nodes = {anchor_p};
    return path;
  }

  // Breadth-first shortest path; neighbors expand in rotation-list order so
  // the result is deterministic.
  std::vector<int> parent_node(net.node_count(), -1);
  std::vector<int> parent_edge(net.node_count(), -1);
  std::vector<char> visited(net.node_count(), 0);
  std::deque<int> queue{anchor_p};
  visited[anchor_p] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == anchor_q) break;
    for (int e : net.rotation()[u]) {
      int v = net.other_end(e, u);
      if (visited[v]) continue;
      visited[v] = 1;
      parent_node[v] = u;
      parent_edge[v] = e;
      queue.push_back(v);
    }
  }
  if (!visited[anchor_q]) {
    throw Error(ErrorCode::EmbeddingError, "anchors are disconnected");
  }
  std::vector<int> rev_nodes{anchor_q};
  std::vector<int> rev_edges;
  for (int v = anchor_q; v != anchor_p; v = parent_node[v]) {
    rev_edges.push_back(parent_edge[v]);
    rev_nodes.push_back(parent_node[v]);
  }
  path.nodes.assign(rev_nodes.rbegin(), rev_nodes.rend());
  path.edges.assign(rev_edges.rbegin(), rev_edges.rend());
  return path;
}

namespace {

enum class PathSide { Undetected, AFirst, ALast };

// Splits the rotation of a path node, rotated to put the reference path edge
// first, into the A block and the rest, verifying the block is where the
// planar picture requires it.
struct RotationSplit {
  std::vector<int> a_block;  // in rotation order
  std::vector<int> rest;     // everything else, reference edge excluded
};

}  // namespace

PlanarNetwork add_split(const PlanarNetwork& net, const Split& split,
                        double weight) {
  if (!(weight > 0.0)) {
    throw Error(ErrorCode::WeightNotPositive, "split weight must be positive");
  }
  for (const auto& [s, w] : net.splits_) {
    if (s == split) {
      throw Error(ErrorCode::DuplicateSplit,
                  "split " + split.to_string() + " already realized");
    }
  }

  ArcPlacement arc = locate_arc(net, split);
  SplitPath path = split_path(net, split);
  int m = static_cast<int>(path.edges.size());

  std::vector<char> on_path(net.node_count(), 0);
  std::vector<int> path_index(net.node_count(), -1);
  for (int t = 0; t <= m; ++t) {
    on_path[path.nodes[t]] = 1;
    path_index[path.nodes[t]] = t;
  }
  std::vector<char> is_path_edge(net.edge_count(), 0);
  for (int e : path.edges) is_path_edge[e] = 1;

  // Label the components of the graph minus the path nodes and classify each
  // by the leaves it contains.
  std::vector<int> comp(net.node_count(), -1);
  std::vector<char> comp_class;  // 'A' or 'B'
  for (int v = 0; v < net.node_count(); ++v) {
    if (on_path[v] || comp[v] >= 0) continue;
    int id = static_cast<int>(comp_class.size());
    std::uint32_t leaves = 0;
    std::deque<int> queue{v};
    comp[v] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (net.nodes()[u].kind == NodeKind::LeafEnd) {
        leaves |= 1u << net.nodes()[u].taxon;
      }
      for (int e : net.rotation()[u]) {
        int w = net.other_end(e, u);
        if (on_path[w] || comp[w] >= 0) continue;
        comp[w] = id;
        queue.push_back(w);
      }
    }
    std::uint32_t b_mask = full_taxa_mask(net.n()) & ~arc.arc_mask;
    if (leaves != 0 && (leaves & ~arc.arc_mask) == 0) {
      comp_class.push_back('A');
    } else if (leaves != 0 && (leaves & ~b_mask) == 0) {
      comp_class.push_back('B');
    } else {
      throw Error(ErrorCode::SideClassificationFailed,
                  "component reaches leaves of both sides of " + split.to_string());
    }
  }

  // Classify the non-path edges incident to each path node.
  std::vector<std::vector<int>> a_edges(m + 1);
  for (int t = 0; t <= m; ++t) {
    for (int e : net.rotation()[path.nodes[t]]) {
      if (is_path_edge[e]) continue;
      int far = net.other_end(e, path.nodes[t]);
      if (on_path[far]) {
        throw Error(ErrorCode::SideClassificationFailed,
                    "non-path edge joins two path nodes");
      }
      if (comp_class[comp[far]] == 'A') a_edges[t].push_back(e);
    }
  }

  PlanarNetwork out = net;

  // Copies of the path nodes and path edges, then one rung per path node.
  std::vector<int> copy_node(m + 1);
  for (int t = 0; t <= m; ++t) {
    copy_node[t] = static_cast<int>(out.nodes_.size());
    out.nodes_.push_back({NodeKind::Internal, 0});
    out.rotation_.emplace_back();
  }
  std::vector<int> copy_edge(m + 1, -1);  // copy_edge[t] mirrors path.edges[t-1]
  for (int t = 1; t <= m; ++t) {
    const NetEdge& original = net.edges()[path.edges[t - 1]];
    copy_edge[t] = static_cast<int>(out.edges_.size());
    out.edges_.push_back(
        {copy_node[t - 1], copy_node[t], original.split, original.weight});
  }
  std::vector<int> rung(m + 1);
  for (int t = 0; t <= m; ++t) {
    rung[t] = static_cast<int>(out.edges_.size());
    out.edges_.push_back({path.nodes[t], copy_node[t], split, weight});
  }

  // Move the duplicated side's attachments over to the copies.
  for (int t = 0; t <= m; ++t) {
    for (int e : a_edges[t]) {
      NetEdge& edge = out.edges_[e];
      if (edge.node_a == path.nodes[t]) {
        edge.node_a = copy_node[t];
      } else {
        edge.node_b = copy_node[t];
      }
    }
  }

  // Rewrite the rotations along the path. The A block of every path node must
  // sit in the gap the duplicated side occupies; whether that gap precedes or
  // follows the path edges is detected once and applied uniformly.
  auto is_a_set = [&](std::vector<int>::const_iterator first, int count,
                      const std::vector<int>& want) {
    if (count != static_cast<int>(want.size())) return false;
    std::set<int> got(first, first + count);
    return got == std::set<int>(want.begin(), want.end());
  };

  if (m == 0) {
    // Trivial path: the rung replaces the A block in place.
    const std::vector<int>& rot = net.rotation()[path.nodes[0]];
    int deg = static_cast<int>(rot.size());
    std::set<int> a_set(a_edges[0].begin(), a_edges[0].end());
    if (a_set.empty() || static_cast<int>(a_set.size()) == deg) {
      throw Error(ErrorCode::EmbeddingError, "degenerate trivial split path");
    }
    int first_b = 0;
    while (a_set.count(rot[first_b])) ++first_b;
    std::vector<int> spun = rotate_to(rot, rot[first_b]);
    std::vector<int> new_rot, a_block;
    int runs = 0;
    for (std::size_t i = 0; i < spun.size(); ++i) {
      bool in_a = a_set.count(spun[i]) > 0;
      if (in_a && !(i > 0 && a_set.count(spun[i - 1]) > 0)) ++runs;
      if (in_a) {
        a_block.push_back(spun[i]);
        if (a_block.size() == 1) new_rot.push_back(rung[0]);
      } else {
        new_rot.push_back(spun[i]);
      }
    }
    if (runs != 1) {
      throw Error(ErrorCode::EmbeddingError,
                  "duplicated side is not contiguous in the rotation");
    }
    out.rotation_[path.nodes[0]] = new_rot;
    std::vector<int> copy_rot = a_block;
    copy_rot.push_back(rung[0]);
    out.rotation_[copy_node[0]] = copy_rot;
  } else {
    PathSide side = PathSide::Undetected;
    // Detect from any node with attachments on the duplicated side.
    for (int t = 0; t <= m && side == PathSide::Undetected; ++t) {
      if (a_edges[t].empty()) continue;
      int ref = t == 0 ? path.edges[0] : path.edges[t - 1];
      std::vector<int> spun = rotate_to(net.rotation()[path.nodes[t]], ref);
      int a_count = static_cast<int>(a_edges[t].size());
      bool first = is_a_set(spun.begin() + 1, a_count, a_edges[t]);
      bool last = is_a_set(spun.end() - a_count, a_count, a_edges[t]);
      if (first == last) continue;  // ambiguous at this node
      if (t == 0) {
        side = last ? PathSide::ALast : PathSide::AFirst;
      } else if (t == m) {
        side = first ? PathSide::ALast : PathSide::AFirst;
      } else {
        // Interior, spun starts at the inbound path edge: the A block follows
        // it when the duplicated side trails the path, else it ends the list.
        side = first ? PathSide::ALast : PathSide::AFirst;
      }
    }
    if (side == PathSide::Undetected) {
      throw Error(ErrorCode::EmbeddingError,
                  "could not orient the duplicated side along the path");
    }

    for (int t = 0; t <= m; ++t) {
      const std::vector<int>& rot = net.rotation()[path.nodes[t]];
      int a_count = static_cast<int>(a_edges[t].size());
      std::vector<int> spun, new_rot, copy_rot, a_block;
      if (t == 0) {
        spun = rotate_to(rot, path.edges[0]);
        if (side == PathSide::ALast) {
          // [pe_1, B..., A...] cyclically means the A block precedes pe_1.
          if (!is_a_set(spun.end() - a_count, a_count, a_edges[t])) {
            throw Error(ErrorCode::EmbeddingError,
                        "A block out of place at the path start");
          }
          a_block.assign(spun.end() - a_count, spun.end());
          new_rot.push_back(rung[0]);
          new_rot.insert(new_rot.end(), spun.begin(), spun.end() - a_count);
          copy_rot.push_back(rung[0]);
          copy_rot.insert(copy_rot.end(), a_block.begin(), a_block.end());
          copy_rot.push_back(copy_edge[1]);
        } else {
          if (!is_a_set(spun.begin() + 1, a_count, a_edges[t])) {
            throw Error(ErrorCode::EmbeddingError,
                        "A block out of place at the path start");
          }
          a_block.assign(spun.begin() + 1, spun.begin() + 1 + a_count);
          new_rot.push_back(spun.front());
          new_rot.push_back(rung[0]);
          new_rot.insert(new_rot.end(), spun.begin() + 1 + a_count, spun.end());
          copy_rot.push_back(rung[0]);
          copy_rot.push_back(copy_edge[1]);
          copy_rot.insert(copy_rot.end(), a_block.begin(), a_block.end());
        }
      } else if (t == m) {
        spun = rotate_to(rot, path.edges[m - 1]);
        if (side == PathSide::ALast) {
          // A block immediately follows the inbound path edge.
          if (!is_a_set(spun.begin() + 1, a_count, a_edges[t])) {
            throw Error(ErrorCode::EmbeddingError,
                        "A block out of place at the path end");
          }
          a_block.assign(spun.begin() + 1, spun.begin() + 1 + a_count);
          new_rot.push_back(spun.front());
          new_rot.push_back(rung[m]);
          new_rot.insert(new_rot.end(), spun.begin() + 1 + a_count, spun.end());
          copy_rot.push_back(copy_edge[m]);
          copy_rot.insert(copy_rot.end(), a_block.begin(), a_block.end());
          copy_rot.push_back(rung[m]);
        } else {
          if (!is_a_set(spun.end() - a_count, a_count, a_edges[t])) {
            throw Error(ErrorCode::EmbeddingError,
                        "A block out of place at the path end");
          }
          a_block.assign(spun.end() - a_count, spun.end());
          new_rot.push_back(rung[m]);
          new_rot.insert(new_rot.end(), spun.begin(), spun.end() - a_count);
          copy_rot.push_back(copy_edge[m]);
          copy_rot.push_back(rung[m]);
          copy_rot.insert(copy_rot.end(), a_block.begin(), a_block.end());
        }
      } else {
        spun = rotate_to(rot, path.edges[t - 1]);
        auto out_pos = std::find(spun.begin(), spun.end(), path.edges[t]);
        if (out_pos == spun.end()) {
          throw Error(ErrorCode::EmbeddingError, "outbound path edge missing");
        }
        if (side == PathSide::ALast) {
          // [pe_in, A..., pe_out, B...]
          if (!is_a_set(spun.begin() + 1, a_count, a_edges[t]) ||
              spun[1 + a_count] != path.edges[t]) {
            throw Error(ErrorCode::EmbeddingError,
                        "A block out of place inside the path");
          }
          a_block.assign(spun.begin() + 1, spun.begin() + 1 + a_count);
          new_rot.push_back(spun.front());
          new_rot.push_back(rung[t]);
          new_rot.insert(new_rot.end(), spun.begin() + 1 + a_count, spun.end());
          copy_rot.push_back(copy_edge[t]);
          copy_rot.insert(copy_rot.end(), a_block.begin(), a_block.end());
          copy_rot.push_back(copy_edge[t + 1]);
          copy_rot.push_back(rung[t]);
        } else {
          // [pe_in, B..., pe_out, A...]
          if (!is_a_set(spun.end() - a_count, a_count, a_edges[t]) ||
              spun[spun.size() - a_count - 1] != path.edges[t]) {
            throw Error(ErrorCode::EmbeddingError,
                        "A block out of place inside the path");
          }
          a_block.assign(spun.end() - a_count, spun.end());
          new_rot.assign(spun.begin(), spun.end() - a_count);
          new_rot.push_back(rung[t]);
          copy_rot.push_back(copy_edge[t]);
          copy_rot.push_back(rung[t]);
          copy_rot.push_back(copy_edge[t + 1]);
          copy_rot.insert(copy_rot.end(), a_block.begin(), a_block.end());
        }
      }
      out.rotation_[path.nodes[t]] = new_rot;
      out.rotation_[copy_node[t]] = copy_rot;
    }
  }

  out.splits_.emplace_back(split, weight);
  return out;
}

PlanarNetwork build_network(const WeightedSplitSystem& system,
                            std::optional<CyclicOrder> order,
                            InsertionOrder insertion, int bound) {
  if (system.rooted()) {
    throw Error(ErrorCode::TaxaMismatch,
                "networks are built over unrooted taxa 1..n");
  }
  int n = system.max_label();
  std::vector<Split> splits = system.splits();
  if (!order) {
    order = find_circular_order(splits, n, bound);
    if (!order) {
      throw Error(ErrorCode::NotCircular,
                  "system admits no common cyclic ordering");
    }
  } else {
    if (order->n() != n) {
      throw Error(ErrorCode::TaxaMismatch, "order size does not match system");
    }
    if (!is_compatible_with_order(splits, *order)) {
      throw Error(ErrorCode::NotCircular,
                  "system is not compatible with the requested order");
    }
  }

  std::vector<WeightedEntry> entries = system.entries();
  if (insertion == InsertionOrder::Canonical) {
    std::sort(entries.begin(), entries.end(),
              [](const WeightedEntry& x, const WeightedEntry& y) {
                return x.split < y.split;
              });
  }

  PlanarNetwork net = PlanarNetwork::n_star(n);
  net.order_ = *order;
  // Re-seat the hub rotation and the leaf map so the star matches the order.
  for (int i = 0; i < n; ++i) {
    int taxon = order->at(i);
    net.rotation_[n][i] = taxon - 1;
  }
  for (const WeightedEntry& e : entries) {
    net = add_split(net, e.split, e.weight);
  }
  return net;
}

RealizationReport verify_realization(const PlanarNetwork& net) {
  RealizationReport report;

  // Whole-graph connectivity.
  std::vector<char> visited(net.node_count(), 0);
  std::deque<int> queue{0};
  visited[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int e : net.rotation()[u]) {
      int v = net.other_end(e, u);
      if (!visited[v]) {
        visited[v] = 1;
        ++reached;
        queue.push_back(v);
      }
    }
  }
  report.connected = reached == net.node_count();

  // No two edges between the same end vertices, no self loops.
  std::set<std::pair<int, int>> endpoint_pairs;
  report.simple = true;
  for (const NetEdge& e : net.edges()) {
    auto key = std::minmax(e.node_a, e.node_b);
    if (e.node_a == e.node_b || !endpoint_pairs.insert(key).second) {
      report.simple = false;
    }
  }

  for (const auto& [split, weight] : net.realized_splits()) {
    SplitClassCheck check;
    check.split = split;
    std::vector<int> class_edges;
    for (int e = 0; e < net.edge_count(); ++e) {
      if (net.edges()[e].split && *net.edges()[e].split == split) {
        class_edges.push_back(e);
      }
    }

    check.equal_weights = !class_edges.empty();
    for (int e : class_edges) {
      if (net.edges()[e].weight != weight) check.equal_weights = false;
    }

    std::set<int> ends;
    check.no_shared_end_vertices = true;
    for (int e : class_edges) {
      if (!ends.insert(net.edges()[e].node_a).second ||
          !ends.insert(net.edges()[e].node_b).second) {
        check.no_shared_end_vertices = false;
      }
    }

    // Removing the class must leave exactly the split's two leaf groups.
    std::vector<char> removed(net.edge_count(), 0);
    for (int e : class_edges) removed[e] = 1;
    std::vector<int> comp(net.node_count(), -1);
    int comp_count = 0;
    std::vector<std::uint32_t> comp_leaves;
    for (int v = 0; v < net.node_count(); ++v) {
      if (comp[v] >= 0) continue;
      int id = comp_count++;
      comp_leaves.push_back(0);
      std::deque<int> q{v};
      comp[v] = id;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (net.nodes()[u].kind == NodeKind::LeafEnd) {
          comp_leaves[id] |= 1u << net.nodes()[u].taxon;
        }
        for (int e : net.rotation()[u]) {
          if (removed[e]) continue;
          int w = net.other_end(e, u);
          if (comp[w] < 0) {
            comp[w] = id;
            q.push_back(w);
          }
        }
      }
    }
    check.removal_disconnects_in_two = comp_count == 2;
    check.leaf_partition_matches =
        comp_count == 2 &&
        ((comp_leaves[0] == split.mask_a() && comp_leaves[1] == split.mask_b()) ||
         (comp_leaves[0] == split.mask_b() && comp_leaves[1] == split.mask_a()));

    report.split_checks.push_back(check);
  }
  return report;
}

}  // namespace csn
