#pragma once

#include <map>
#include <string>
#include <vector>

#include "csn/complex.hpp"
#include "csn/dual_graph.hpp"
#include "csn/network.hpp"
#include "csn/split.hpp"

namespace csn {

// Shortest decimal representation that round-trips the value.
std::string format_double(double value);

// Text format for weighted split systems:
//   taxa <n>
//   name <i> <display name>     (optional)
//   <comma-separated A side> <weight>
// '#' starts a comment; the B side is the complement.
struct SplitsDocument {
  int n = 0;
  std::map<int, std::string> names;
  std::vector<WeightedEntry> entries;
};

SplitsDocument parse_splits(const std::string& text);
std::string emit_splits(const SplitsDocument& doc);
WeightedSplitSystem system_of(const SplitsDocument& doc);

// Newick subset: integer leaf labels, non-negative branch lengths, no quoted
// names or comments. Internal lengths become split weights over the rooted
// universe {0..m}; leaf lengths become the external weights. Zero or missing
// lengths collapse.
EvolutionaryPoint parse_newick(const std::string& text);
std::string emit_newick(const EvolutionaryPoint& point);

std::string emit_dot(const PlanarNetwork& net,
                     const std::map<int, std::string>& names = {});
std::string emit_dot(const DualGraphModel& dual,
                     const std::map<int, std::string>& names = {});

std::string network_json(const PlanarNetwork& net);
std::string dual_json(const DualGraphModel& dual);
std::string complex_json(const SimplicialComplex& complex);

}  // namespace csn
