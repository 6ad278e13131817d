#include "pfdimers/surface_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "pfdimers/errors.hpp"

namespace pfdimers {

int CombinatorialMap::succ(int h) const {
  const auto& rot = rotations_[anchor(h)];
  int p = position_[h] + 1;
  return rot[p == static_cast<int>(rot.size()) ? 0 : p];
}

int CombinatorialMap::pred(int h) const {
  const auto& rot = rotations_[anchor(h)];
  int p = position_[h];
  return rot[p == 0 ? rot.size() - 1 : p - 1];
}

CombinatorialMap build_map(int vertex_count, const std::vector<EdgeSpec>& edges,
                           const std::vector<std::vector<int>>& rotations) {
  if (vertex_count < 1) throw Error(ErrorKind::MalformedRotation, "a map needs at least one vertex");
  if (static_cast<int>(rotations.size()) != vertex_count)
    throw Error(ErrorKind::MalformedRotation, "expected one rotation per vertex");

  CombinatorialMap map;
  const int edge_count = static_cast<int>(edges.size());
  map.ends_.reserve(edge_count);
  for (int e = 0; e < edge_count; ++e) {
    const auto& spec = edges[e];
    if (spec.u < 0 || spec.u >= vertex_count || spec.v < 0 || spec.v >= vertex_count)
      throw Error(ErrorKind::MalformedRotation, "edge " + std::to_string(e) + " has an endpoint out of range");
    if (sgn(spec.weight) <= 0)
      throw Error(ErrorKind::NegativeWeight, "edge " + std::to_string(e) + " has non-positive weight");
    map.ends_.push_back({spec.u, spec.v});
    map.twists_.push_back(spec.twisted ? 1 : 0);
    map.weights_.push_back(spec.weight);
  }

  map.position_.assign(2 * edge_count, -1);
  for (int v = 0; v < vertex_count; ++v) {
    const auto& rot = rotations[v];
    for (int p = 0; p < static_cast<int>(rot.size()); ++p) {
      int h = rot[p];
      if (h < 0 || h >= 2 * edge_count)
        throw Error(ErrorKind::MalformedRotation, "vertex " + std::to_string(v) + " lists unknown half-edge");
      if (map.position_[h] != -1)
        throw Error(ErrorKind::MalformedRotation, "half-edge " + std::to_string(h) + " appears twice");
      if (map.anchor(h) != v)
        throw Error(ErrorKind::MalformedRotation,
                    "half-edge " + std::to_string(h) + " listed at vertex " + std::to_string(v) +
                        " but anchored at " + std::to_string(map.anchor(h)));
      map.position_[h] = p;
    }
  }
  for (int h = 0; h < 2 * edge_count; ++h)
    if (map.position_[h] == -1)
      throw Error(ErrorKind::MalformedRotation, "half-edge " + std::to_string(h) + " missing from rotations");
  map.rotations_ = rotations;

  // Connectivity.
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count;
  for (const auto& e : map.ends_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) throw Error(ErrorKind::DisconnectedGraph, std::to_string(components) + " components");
  return map;
}

std::vector<EdgeSpec> edge_specs(const CombinatorialMap& map) {
  std::vector<EdgeSpec> out;
  for (int e = 0; e < map.edge_count(); ++e)
    out.push_back({map.ends(e).u, map.ends(e).v, map.twisted(e), map.weight(e)});
  return out;
}

static std::vector<std::vector<int>> rotations_of(const CombinatorialMap& map) {
  std::vector<std::vector<int>> rot(map.vertex_count());
  for (int v = 0; v < map.vertex_count(); ++v) rot[v].assign(map.rotation(v).begin(), map.rotation(v).end());
  return rot;
}

CombinatorialMap relabel_vertices(const CombinatorialMap& map, const std::vector<int>& perm) {
  auto edges = edge_specs(map);
  for (auto& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  auto old_rot = rotations_of(map);
  std::vector<std::vector<int>> rot(map.vertex_count());
  for (int v = 0; v < map.vertex_count(); ++v) rot[perm[v]] = old_rot[v];
  return build_map(map.vertex_count(), edges, rot);
}

CombinatorialMap with_weights(const CombinatorialMap& map, const std::vector<Rational>& weights) {
  auto edges = edge_specs(map);
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e].weight = weights[e];
  return build_map(map.vertex_count(), edges, rotations_of(map));
}

CombinatorialMap switch_local_orientation(const CombinatorialMap& map, int v) {
  auto edges = edge_specs(map);
  for (auto& e : edges)
    if ((e.u == v) != (e.v == v)) e.twisted = !e.twisted;
  auto rot = rotations_of(map);
  std::reverse(rot[v].begin(), rot[v].end());
  return build_map(map.vertex_count(), edges, rot);
}

FaceSet trace_faces(const CombinatorialMap& map) {
  FaceSet out;
  if (map.edge_count() == 0) {
    out.faces.emplace_back();
    return out;
  }
  // State (h, s) -> index h*2+s. Each face appears as two mirror orbits;
  // marking the mirror of every visited state keeps one of them.
  std::vector<std::uint8_t> seen(4 * map.edge_count(), 0);
  auto id = [](int h, int s) { return 2 * h + s; };
  for (int h0 = 0; h0 < map.half_edge_count(); ++h0) {
    for (int s0 = 0; s0 < 2; ++s0) {
      if (seen[id(h0, s0)]) continue;
      Face face;
      int h = h0, s = s0;
      do {
        seen[id(h, s)] = 1;
        int e = CombinatorialMap::edge_of(h);
        int t = map.twisted(e) ? 1 : 0;
        seen[id(CombinatorialMap::twin(h), 1 - (s ^ t))] = 1;
        face.push_back({h, s});
        int arrive = CombinatorialMap::twin(h);
        s ^= t;
        h = s == 0 ? map.pred(arrive) : map.succ(arrive);
      } while (h != h0 || s != s0);
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

std::string SurfaceType::name() const {
  if (orientable()) {
    if (genus == 0) return "sphere";
    if (genus == 1) return "torus";
    return "orientable genus " + std::to_string(genus);
  }
  if (b1 == 1) return "projective plane";
  if (b1 == 2) return "Klein bottle";
  return "non-orientable b1 " + std::to_string(b1);
}

int euler_characteristic(const CombinatorialMap& map, const FaceSet& faces) {
  return map.vertex_count() - map.edge_count() + faces.size();
}

bool is_orientable(const CombinatorialMap& map) {
  try {
    vertex_labels(map, Bits(map.edge_count(), 0));
    return true;
  } catch (const Error&) {
    return false;
  }
}

SurfaceType classify(const CombinatorialMap& map, const FaceSet& faces) {
  SurfaceType t;
  t.euler = euler_characteristic(map, faces);
  t.b1 = 2 - t.euler;
  if (is_orientable(map)) {
    t.kind = SurfaceKind::Orientable;
    t.genus = t.b1 / 2;
  } else {
    t.kind = SurfaceKind::NonOrientable;
    t.genus = t.b1;
  }
  return t;
}

SurfaceType classify(const CombinatorialMap& map) { return classify(map, trace_faces(map)); }

Bits stiefel_whitney_cocycle(const CombinatorialMap& map) { return map.twists(); }

Labelling Labelling::swapped() const {
  Labelling out = *this;
  for (auto& b : out.minus_on_sheet0) b ^= 1;
  out.reversed = !out.reversed;
  return out;
}

Labelling Labelling::flipped_at(int v) const {
  Labelling out = *this;
  out.minus_on_sheet0[v] ^= 1;
  return out;
}

Labelling vertex_labels(const CombinatorialMap& map, const Bits& omega, int root) {
  const int n = map.vertex_count();
  if (static_cast<int>(omega.size()) != map.edge_count())
    throw Error(ErrorKind::InvalidCocycle, "cochain has the wrong length");
  Labelling labels;
  labels.minus_on_sheet0.assign(n, 0);
  std::vector<std::uint8_t> done(n, 0);
  std::queue<int> todo;
  done[root] = 1;
  todo.push(root);
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int h : map.rotation(x)) {
      int e = CombinatorialMap::edge_of(h);
      int y = map.anchor(CombinatorialMap::twin(h));
      std::uint8_t label = labels.minus_on_sheet0[x] ^ (omega[e] & 1) ^ map.twists()[e];
      if (!done[y]) {
        done[y] = 1;
        labels.minus_on_sheet0[y] = label;
        todo.push(y);
      } else if (labels.minus_on_sheet0[y] != label) {
        throw Error(ErrorKind::InvalidCocycle,
                    "cochain is not cohomologous to the twist cochain (edge " + std::to_string(e) + ")");
      }
    }
  }
  return labels;
}

void check_closed(const CombinatorialMap& map, const ClosedWalk& walk) {
  if (walk.steps.empty()) throw Error(ErrorKind::NotAClosedWalk, "empty walk");
  const int L = walk.length();
  for (int k = 0; k < L; ++k) {
    int h = walk.steps[k];
    if (h < 0 || h >= map.half_edge_count()) throw Error(ErrorKind::NotAClosedWalk, "unknown half-edge");
    int next = walk.steps[(k + 1) % L];
    if (next < 0 || next >= map.half_edge_count()) throw Error(ErrorKind::NotAClosedWalk, "unknown half-edge");
    if (map.anchor(CombinatorialMap::twin(h)) != map.anchor(next))
      throw Error(ErrorKind::NotAClosedWalk, "step " + std::to_string(k) + " does not connect");
  }
}

std::vector<int> walk_vertices(const CombinatorialMap& map, const ClosedWalk& walk) {
  std::vector<int> out;
  for (int h : walk.steps) out.push_back(map.anchor(h));
  return out;
}

bool is_vertex_simple(const CombinatorialMap& map, const ClosedWalk& walk) {
  auto vs = walk_vertices(map, walk);
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  // A 2-step walk back along the same edge is degenerate.
  if (walk.length() == 2 && CombinatorialMap::edge_of(walk.steps[0]) == CombinatorialMap::edge_of(walk.steps[1]))
    return false;
  return true;
}

void check_simple(const CombinatorialMap& map, const ClosedWalk& walk) {
  check_closed(map, walk);
  if (!is_vertex_simple(map, walk)) throw Error(ErrorKind::NotSimple, "walk revisits a vertex");
}

Bits walk_chain(const CombinatorialMap& map, const ClosedWalk& walk) {
  Bits c(map.edge_count(), 0);
  for (int h : walk.steps) c[CombinatorialMap::edge_of(h)] ^= 1;
  return c;
}

int walk_twist(const CombinatorialMap& map, const ClosedWalk& walk) {
  int t = 0;
  for (int h : walk.steps) t ^= map.twists()[CombinatorialMap::edge_of(h)];
  return t;
}

ClosedWalk reversed(const ClosedWalk& walk) {
  ClosedWalk out;
  for (auto it = walk.steps.rbegin(); it != walk.steps.rend(); ++it) out.steps.push_back(CombinatorialMap::twin(*it));
  return out;
}

ClosedWalk walk_from_edges(const CombinatorialMap& map, int start, const std::vector<int>& edges) {
  ClosedWalk walk;
  int x = start;
  for (int e : edges) {
    if (e < 0 || e >= map.edge_count()) throw Error(ErrorKind::NotAClosedWalk, "unknown edge");
    int h;
    if (map.ends(e).u == x) h = CombinatorialMap::half_edge(e, 0);
    else if (map.ends(e).v == x) h = CombinatorialMap::half_edge(e, 1);
    else throw Error(ErrorKind::NotAClosedWalk, "edge " + std::to_string(e) + " does not touch vertex " + std::to_string(x));
    walk.steps.push_back(h);
    x = map.anchor(CombinatorialMap::twin(h));
  }
  check_closed(map, walk);
  return walk;
}

}  // namespace pfdimers
