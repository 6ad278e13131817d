#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "pfdimers/homology.hpp"
#include "pfdimers/surface_graph.hpp"

namespace pfdimers {

// Line-oriented text format:
//
//   vertices <n>
//   edge <id> <u> <v> <twist 0|1> <weight>
//   rotation <v> <e.s> <e.s> ...       half-edges counterclockwise
//   omega <edge ids...>                optional, edges where omega is 1
//   curve <alpha|beta> <name> <edge ids crossed...>
//   companion <name> <e.s> ...         closed walk next to the curve
//
// '#' starts a comment. Edge ids must be 0..E-1.
struct GraphFile {
  CombinatorialMap map;
  std::optional<Cochain1> omega;
  std::optional<CurveSet> curves;
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_string(std::string_view text);
std::string serialize_graph(const GraphFile& file);
std::string serialize_graph(const CombinatorialMap& map);

std::string half_edge_name(int h);

}  // namespace pfdimers
