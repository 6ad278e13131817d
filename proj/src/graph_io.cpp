#include "pfdimers/graph_io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "pfdimers/errors.hpp"

namespace pfdimers {

namespace {

[[noreturn]] void fail(int line, const std::string& why) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + why);
}

int parse_int(const std::string& token, int line) {
  int value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) fail(line, "expected an integer, got '" + token + "'");
  return value;
}

int parse_half_edge(const std::string& token, int line) {
  auto dot = token.find('.');
  if (dot == std::string::npos) fail(line, "expected a half-edge e.s, got '" + token + "'");
  int e = parse_int(token.substr(0, dot), line), s = parse_int(token.substr(dot + 1), line);
  if (e < 0 || (s != 0 && s != 1)) fail(line, "bad half-edge '" + token + "'");
  return CombinatorialMap::half_edge(e, s);
}

struct PendingCurve {
  CurveKind kind;
  std::string name;
  std::vector<int> crossed;
  std::optional<std::vector<int>> companion;
  int line;
};

}  // namespace

std::string half_edge_name(int h) {
  return std::to_string(CombinatorialMap::edge_of(h)) + "." + std::to_string(CombinatorialMap::side_of(h));
}

GraphFile parse_graph(std::istream& in) {
  int vertices = -1;
  std::map<int, EdgeSpec> edges;
  std::map<int, std::vector<int>> rotations;
  std::optional<std::vector<int>> omega_edges;
  std::vector<PendingCurve> curves;
  std::map<std::string, std::size_t> curve_index;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "vertices") {
      if (tok.size() != 2) fail(line, "usage: vertices <n>");
      if (vertices >= 0) fail(line, "vertices given twice");
      vertices = parse_int(tok[1], line);
      if (vertices < 1) fail(line, "need at least one vertex");
    } else if (key == "edge") {
      if (tok.size() != 6) fail(line, "usage: edge <id> <u> <v> <twist> <weight>");
      int id = parse_int(tok[1], line);
      if (id < 0 || edges.count(id)) fail(line, "duplicate or negative edge id " + tok[1]);
      int twist = parse_int(tok[4], line);
      if (twist != 0 && twist != 1) fail(line, "twist must be 0 or 1");
      Rational w;
      try {
        w = parse_rational(tok[5]);
      } catch (const Error& err) {
        fail(line, err.what());
      }
      edges[id] = {parse_int(tok[2], line), parse_int(tok[3], line), twist == 1, w};
    } else if (key == "rotation") {
      if (tok.size() < 2) fail(line, "usage: rotation <v> <e.s>...");
      int v = parse_int(tok[1], line);
      if (rotations.count(v)) fail(line, "rotation of vertex " + tok[1] + " given twice");
      auto& rot = rotations[v];
      for (std::size_t i = 2; i < tok.size(); ++i) rot.push_back(parse_half_edge(tok[i], line));
    } else if (key == "omega") {
      if (omega_edges) fail(line, "omega given twice");
      omega_edges.emplace();
      for (std::size_t i = 1; i < tok.size(); ++i) omega_edges->push_back(parse_int(tok[i], line));
    } else if (key == "curve") {
      if (tok.size() < 3) fail(line, "usage: curve <alpha|beta> <name> <edges...>");
      PendingCurve c{CurveKind::Alpha, tok[2], {}, std::nullopt, line};
      if (tok[1] == "beta") c.kind = CurveKind::Beta;
      else if (tok[1] != "alpha") fail(line, "curve kind must be alpha or beta");
      if (curve_index.count(c.name)) fail(line, "curve " + c.name + " given twice");
      for (std::size_t i = 3; i < tok.size(); ++i) c.crossed.push_back(parse_int(tok[i], line));
      curve_index[c.name] = curves.size();
      curves.push_back(std::move(c));
    } else if (key == "companion") {
      if (tok.size() < 3) fail(line, "usage: companion <name> <e.s>...");
      auto it = curve_index.find(tok[1]);
      if (it == curve_index.end()) fail(line, "companion for unknown curve " + tok[1]);
      auto& c = curves[it->second];
      if (c.companion) fail(line, "companion of " + tok[1] + " given twice");
      c.companion.emplace();
      for (std::size_t i = 2; i < tok.size(); ++i) c.companion->push_back(parse_half_edge(tok[i], line));
    } else {
      fail(line, "unknown directive '" + key + "'");
    }
  }
  if (vertices < 0) fail(line, "missing 'vertices' line");
  const int E = static_cast<int>(edges.size());
  std::vector<EdgeSpec> specs;
  for (int e = 0; e < E; ++e) {
    auto it = edges.find(e);
    if (it == edges.end()) fail(line, "edge ids must be 0.." + std::to_string(E - 1));
    specs.push_back(it->second);
  }
  std::vector<std::vector<int>> rot(vertices);
  for (auto& [v, r] : rotations) {
    if (v < 0 || v >= vertices) fail(line, "rotation for unknown vertex " + std::to_string(v));
    rot[v] = r;
  }
  GraphFile out;
  out.map = build_map(vertices, specs, rot);

  auto edge_set = [&](const std::vector<int>& ids, const std::string& what) {
    Cochain1 c(E, 0);
    for (int e : ids) {
      if (e < 0 || e >= E) fail(line, what + " names unknown edge " + std::to_string(e));
      c[e] ^= 1;
    }
    return c;
  };
  if (omega_edges) out.omega = edge_set(*omega_edges, "omega");
  if (!curves.empty()) {
    CurveSet set;
    set.omega.assign(E, 0);
    for (auto& c : curves) {
      if (!c.companion) fail(c.line, "curve " + c.name + " has no companion");
      Curve curve{c.kind, c.name, edge_set(c.crossed, "curve " + c.name), ClosedWalk{*c.companion}};
      for (int h : curve.companion.steps)
        if (h >= out.map.half_edge_count()) fail(c.line, "companion of " + c.name + " names unknown half-edge");
      if (c.kind == CurveKind::Beta) xor_into(set.omega, curve.crossing);
      set.curves.push_back(std::move(curve));
    }
    if (out.omega) set.omega = *out.omega;
    out.curves = std::move(set);
  }
  return out;
}

GraphFile parse_graph_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_graph(const GraphFile& file) {
  const auto& map = file.map;
  std::ostringstream out;
  out << "vertices " << map.vertex_count() << "\n";
  for (int e = 0; e < map.edge_count(); ++e)
    out << "edge " << e << " " << map.ends(e).u << " " << map.ends(e).v << " " << (map.twisted(e) ? 1 : 0) << " "
        << to_string(map.weight(e)) << "\n";
  for (int v = 0; v < map.vertex_count(); ++v) {
    out << "rotation " << v;
    for (int h : map.rotation(v)) out << " " << half_edge_name(h);
    out << "\n";
  }
  const Cochain1* omega = file.omega ? &*file.omega : (file.curves ? &file.curves->omega : nullptr);
  if (omega) {
    out << "omega";
    for (int e = 0; e < map.edge_count(); ++e)
      if ((*omega)[e]) out << " " << e;
    out << "\n";
  }
  if (file.curves)
    for (const auto& c : file.curves->curves) {
      out << "curve " << (c.kind == CurveKind::Alpha ? "alpha" : "beta") << " " << c.name;
      for (int e = 0; e < map.edge_count(); ++e)
        if (c.crossing[e]) out << " " << e;
      out << "\ncompanion " << c.name;
      for (int h : c.companion.steps) out << " " << half_edge_name(h);
      out << "\n";
    }
  return out.str();
}

std::string serialize_graph(const CombinatorialMap& map) { return serialize_graph(GraphFile{map, std::nullopt, std::nullopt}); }

}  // namespace pfdimers
