#include "pfdimers/generators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "pfdimers/errors.hpp"

namespace pfdimers {

std::vector<WordLetter> parse_word(std::string_view word) {
  std::vector<WordLetter> out;
  std::size_t i = 0;
  while (i < word.size()) {
    char c = word[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::OpenSurfaceWord, "unexpected '" + std::string(1, c) + "' in word");
    WordLetter letter{c, false};
    ++i;
    if (word.substr(i, 3) == "^-1") {
      letter.inverse = true;
      i += 3;
    } else if (i < word.size() && word[i] == '\'') {
      letter.inverse = true;
      ++i;
    }
    out.push_back(letter);
  }
  return out;
}

EmbeddedGraph from_polygon_word(std::string_view word, const PolygonGraph& graph) {
  auto letters = parse_word(word);
  std::map<char, std::vector<int>> occurrences;
  for (int p = 0; p < static_cast<int>(letters.size()); ++p) occurrences[letters[p].letter].push_back(p);
  if (letters.empty()) throw Error(ErrorKind::OpenSurfaceWord, "empty word");
  std::vector<std::uint8_t> reversing(letters.size(), 0);
  for (const auto& [letter, where] : occurrences) {
    if (where.size() != 2)
      throw Error(ErrorKind::OpenSurfaceWord, std::string("letter ") + letter + " appears " +
                                                  std::to_string(where.size()) + " times");
    std::uint8_t same = letters[where[0]].inverse == letters[where[1]].inverse;
    reversing[where[0]] = reversing[where[1]] = same;
  }
  std::vector<EdgeSpec> specs;
  for (const auto& e : graph.edges) {
    int parity = 0;
    for (int side : e.crossed_sides) {
      if (side < 0 || side >= static_cast<int>(letters.size()))
        throw Error(ErrorKind::OpenSurfaceWord, "edge crosses unknown side " + std::to_string(side));
      parity ^= reversing[side];
    }
    specs.push_back({e.u, e.v, parity != 0, e.weight});
  }
  EmbeddedGraph out{build_map(graph.vertex_count, specs, graph.rotations), {}};
  out.omega = out.map.twists();
  return out;
}

std::optional<LatticeSurface> parse_lattice_surface(std::string_view name) {
  if (name == "planar" || name == "sphere") return LatticeSurface::Planar;
  if (name == "torus") return LatticeSurface::Torus;
  if (name == "rp2" || name == "projective_plane") return LatticeSurface::ProjectivePlane;
  if (name == "klein_hexagon" || name == "klein") return LatticeSurface::KleinHexagon;
  return std::nullopt;
}

std::string_view lattice_surface_name(LatticeSurface surface) {
  switch (surface) {
    case LatticeSurface::Planar: return "planar";
    case LatticeSurface::Torus: return "torus";
    case LatticeSurface::ProjectivePlane: return "rp2";
    case LatticeSurface::KleinHexagon: return "klein_hexagon";
  }
  return "";
}

std::string_view lattice_word(LatticeSurface surface) {
  switch (surface) {
    case LatticeSurface::Planar: return "a a^-1";
    case LatticeSurface::Torus: return "a b a^-1 b^-1";
    case LatticeSurface::ProjectivePlane: return "a b a b";
    case LatticeSurface::KleinHexagon: return "a a b c c b^-1";
  }
  return "";
}

namespace {

enum Direction { East = 0, North = 1, West = 2, South = 3 };

struct LatticeBuilder {
  int rows, cols;
  PolygonGraph graph;
  std::vector<std::array<int, 4>> slot;

  LatticeBuilder(int r, int c) : rows(r), cols(c), slot(r * c, std::array<int, 4>{-1, -1, -1, -1}) {
    graph.vertex_count = r * c;
  }

  int id(int r, int c) const { return r * cols + c; }

  int add(int a, Direction da, int b, Direction db, std::vector<int> sides = {}) {
    int e = static_cast<int>(graph.edges.size());
    graph.edges.push_back({a, b, std::move(sides), 1});
    slot[a][da] = 2 * e;
    slot[b][db] = 2 * e + 1;
    return e;
  }

  PolygonGraph finish() {
    graph.rotations.assign(graph.vertex_count, {});
    for (int v = 0; v < graph.vertex_count; ++v)
      for (int d = 0; d < 4; ++d)
        if (slot[v][d] >= 0) graph.rotations[v].push_back(slot[v][d]);
    return graph;
  }
};

}  // namespace

Instance lattice(LatticeSurface surface, int rows, int cols) {
  if (rows < 2 || cols < 2)
    throw Error(ErrorKind::BadDimensions, "lattice needs at least 2 rows and 2 columns");
  if (surface == LatticeSurface::KleinHexagon && cols % 2 != 0)
    throw Error(ErrorKind::BadDimensions, "klein_hexagon needs an even number of columns");
  if (rows * cols > 4096) throw Error(ErrorKind::BadDimensions, "lattice too large");

  LatticeBuilder b(rows, cols);
  // horizontal[r][c]: edge leaving (r, c) to the east; vertical[r][c]: to the south.
  std::vector<std::vector<int>> horizontal(rows, std::vector<int>(cols, -1)), vertical(rows, std::vector<int>(cols, -1));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) horizontal[r][c] = b.add(b.id(r, c), East, b.id(r, c + 1), West);
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) vertical[r][c] = b.add(b.id(r, c), South, b.id(r + 1, c), North);

  std::vector<int> top(cols, -1), bottom(cols, -1), side(rows, -1);
  switch (surface) {
    case LatticeSurface::Planar:
      break;
    case LatticeSurface::Torus:
      for (int r = 0; r < rows; ++r) horizontal[r][cols - 1] = b.add(b.id(r, cols - 1), East, b.id(r, 0), West, {1});
      for (int c = 0; c < cols; ++c) vertical[rows - 1][c] = b.add(b.id(rows - 1, c), South, b.id(0, c), North, {0});
      break;
    case LatticeSurface::ProjectivePlane:
      for (int r = 0; r < rows; ++r) side[r] = b.add(b.id(r, cols - 1), East, b.id(rows - 1 - r, 0), West, {1});
      for (int c = 0; c < cols; ++c) top[c] = b.add(b.id(0, c), North, b.id(rows - 1, cols - 1 - c), South, {0});
      break;
    case LatticeSurface::KleinHexagon: {
      const int half = cols / 2;
      for (int r = 0; r < rows; ++r) horizontal[r][cols - 1] = b.add(b.id(r, cols - 1), East, b.id(r, 0), West, {2});
      for (int j = 0; j < half; ++j) top[j] = b.add(b.id(0, j), North, b.id(0, j + half), North, {0});
      for (int j = 0; j < half; ++j)
        bottom[j] = b.add(b.id(rows - 1, j), South, b.id(rows - 1, j + half), South, {4});
      break;
    }
  }

  auto embedded = from_polygon_word(lattice_word(surface), b.finish());
  Instance out{std::move(embedded.map), std::move(embedded.omega), std::nullopt};
  const auto& map = out.map;

  auto labels = vertex_labels(map, out.omega);
  CurveSet curves;
  curves.omega = out.omega;
  switch (surface) {
    case LatticeSurface::Planar:
      break;
    case LatticeSurface::Torus: {
      std::vector<int> column, row;
      for (int r = rows - 1; r >= 0; --r) column.push_back(vertical[r][0]);
      for (int c = 0; c < cols; ++c) row.push_back(horizontal[0][c]);
      curves.curves.push_back(companion_curve(map, labels, CurveKind::Alpha, "a1", walk_from_edges(map, 0, column)));
      curves.curves.push_back(companion_curve(map, labels, CurveKind::Alpha, "a2", walk_from_edges(map, 0, row)));
      break;
    }
    case LatticeSurface::ProjectivePlane: {
      std::vector<int> ring;
      for (int c = cols - 2; c >= 0; --c) ring.push_back(horizontal[rows - 1][c]);
      for (int r = rows - 2; r >= 0; --r) ring.push_back(vertical[r][0]);
      ring.push_back(top[0]);
      curves.curves.push_back(
          companion_curve(map, labels, CurveKind::Beta, "b1", walk_from_edges(map, b.id(rows - 1, cols - 1), ring)));
      break;
    }
    case LatticeSurface::KleinHexagon: {
      const int half = cols / 2;
      std::vector<int> upper, lower;
      for (int c = 0; c < half; ++c) upper.push_back(horizontal[0][c]);
      upper.push_back(top[0]);
      for (int c = half - 1; c >= 0; --c) lower.push_back(horizontal[rows - 1][c]);
      lower.push_back(bottom[0]);
      curves.curves.push_back(companion_curve(map, labels, CurveKind::Beta, "b1", walk_from_edges(map, 0, upper)));
      curves.curves.push_back(
          companion_curve(map, labels, CurveKind::Beta, "b2", walk_from_edges(map, b.id(rows - 1, half), lower)));
      break;
    }
  }
  if (surface != LatticeSurface::Planar) check_curves(map, curves);
  out.curves = std::move(curves);
  return out;
}

std::vector<Rational> random_weights(int count, std::mt19937_64& rng, int max_numerator, int max_denominator) {
  std::uniform_int_distribution<int> num(1, max_numerator), den(1, max_denominator);
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) {
    Rational w(num(rng), den(rng));
    w.canonicalize();
    out.push_back(w);
  }
  return out;
}

CombinatorialMap random_map(std::mt19937_64& rng, int vertices, int extra_edges, double twist_probability,
                            bool allow_loops) {
  std::vector<EdgeSpec> edges;
  std::bernoulli_distribution twist(twist_probability);
  for (int v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back({pick(rng), v, twist(rng), 1});
  }
  std::uniform_int_distribution<int> any(0, vertices - 1);
  for (int i = 0; i < extra_edges; ++i) {
    int u = any(rng), v = any(rng);
    if (u == v && !allow_loops) {
      if (vertices == 1) continue;
      v = (u + 1 + std::uniform_int_distribution<int>(0, vertices - 2)(rng)) % vertices;
    }
    edges.push_back({u, v, twist(rng), 1});
  }
  std::vector<std::vector<int>> rotations(vertices);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    rotations[edges[e].u].push_back(2 * e);
    rotations[edges[e].v].push_back(2 * e + 1);
  }
  for (auto& r : rotations) std::shuffle(r.begin(), r.end(), rng);
  return build_map(vertices, edges, rotations);
}

}  // namespace pfdimers
