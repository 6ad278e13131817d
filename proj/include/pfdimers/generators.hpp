#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pfdimers/homology.hpp"
#include "pfdimers/surface_graph.hpp"

namespace pfdimers {

// A graph drawn in a polygon whose sides are glued according to a word.
// Each edge lists the word positions (sides) it passes through.
struct PolygonEdge {
  int u = 0;
  int v = 0;
  std::vector<int> crossed_sides;
  Rational weight = 1;
};

struct PolygonGraph {
  int vertex_count = 0;
  std::vector<PolygonEdge> edges;
  // Counterclockwise half-edge order at each vertex, in the polygon chart.
  std::vector<std::vector<int>> rotations;
};

struct WordLetter {
  char letter = 'a';
  bool inverse = false;
};

// Letters with optional inverse marks: "a a b c c b^-1", "abab", "a b a' b'".
std::vector<WordLetter> parse_word(std::string_view word);

struct EmbeddedGraph {
  CombinatorialMap map;
  Cochain1 omega;
};

// Edges crossing an odd number of orientation-reversing sides (a letter
// appearing twice with the same exponent) are twisted, and omega is the
// twist cochain. Throws OpenSurfaceWord if a letter does not appear twice.
EmbeddedGraph from_polygon_word(std::string_view word, const PolygonGraph& graph);

enum class LatticeSurface { Planar, Torus, ProjectivePlane, KleinHexagon };

std::optional<LatticeSurface> parse_lattice_surface(std::string_view name);
std::string_view lattice_surface_name(LatticeSurface surface);
std::string_view lattice_word(LatticeSurface surface);

struct Instance {
  CombinatorialMap map;
  Cochain1 omega;
  std::optional<CurveSet> curves;
};

// rows x cols square lattice in the polygon of the given surface. Vertex
// (r, c) has id r * cols + c with row 0 at the top; rotations are E N W S.
// Throws BadDimensions for sizes the gluing cannot accommodate.
Instance lattice(LatticeSurface surface, int rows, int cols);

std::vector<Rational> random_weights(int count, std::mt19937_64& rng, int max_numerator = 9, int max_denominator = 4);

// Connected random map: a random spanning tree plus extra edges, random
// rotations and twists. Surface type is whatever falls out.
CombinatorialMap random_map(std::mt19937_64& rng, int vertices, int extra_edges, double twist_probability,
                            bool allow_loops = false);

}  // namespace pfdimers
