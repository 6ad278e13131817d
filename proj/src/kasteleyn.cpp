#include "pfdimers/kasteleyn.hpp"

#include <queue>
#include <unordered_set>

#include "pfdimers/errors.hpp"

namespace pfdimers {

using M = CombinatorialMap;

Orientation canonical_orientation(const CombinatorialMap& map) {
  Orientation k(map.edge_count(), 0);
  for (int e = 0; e < map.edge_count(); ++e) k[e] = map.ends(e).u > map.ends(e).v ? 1 : 0;
  return k;
}

int tail(const CombinatorialMap& map, const Orientation& k, int e) { return k[e] ? map.ends(e).v : map.ends(e).u; }
int head(const CombinatorialMap& map, const Orientation& k, int e) { return k[e] ? map.ends(e).u : map.ends(e).v; }

int curvature(const CombinatorialMap& map, const Labelling& labels, const Orientation& k, const Face& face) {
  int against = 0, minus_minus = 0;
  for (const auto& step : face) {
    int e = M::edge_of(step.half_edge);
    against += (k[e] & 1) != M::side_of(step.half_edge);
    int from = map.anchor(step.half_edge), to = map.anchor(M::twin(step.half_edge));
    int to_sheet = step.sheet ^ map.twists()[e];
    minus_minus += labels.minus(from, step.sheet) && labels.minus(to, to_sheet);
  }
  // In the reversed cover orientation the face is traversed the other way.
  if (labels.reversed) against = static_cast<int>(face.size()) - against;
  return (against + minus_minus + 1) & 1;
}

CurvatureReport curvature_report(const CombinatorialMap& map, const FaceSet& faces, const Labelling& labels,
                                 const Orientation& k) {
  CurvatureReport r;
  for (const auto& f : faces.faces) {
    int c = curvature(map, labels, k, f);
    r.per_face.push_back(static_cast<std::uint8_t>(c));
    r.curved_faces += c;
  }
  return r;
}

bool is_kasteleyn(const CombinatorialMap& map, const FaceSet& faces, const Labelling& labels, const Orientation& k) {
  return curvature_report(map, faces, labels, k).curved_faces == 0;
}

namespace {

// For each edge, the faces whose curvature flips when the edge is reversed.
std::vector<std::vector<int>> faces_flipped_by_edge(const CombinatorialMap& map, const FaceSet& faces) {
  std::vector<std::vector<int>> out(map.edge_count());
  for (int f = 0; f < faces.size(); ++f) {
    for (const auto& step : faces.faces[f]) {
      auto& list = out[M::edge_of(step.half_edge)];
      if (!list.empty() && list.back() == f) list.pop_back();
      else list.push_back(f);
    }
  }
  return out;
}

}  // namespace

Orientation construct_kasteleyn(const CombinatorialMap& map, const Labelling& labels) {
  if (map.vertex_count() % 2 != 0)
    throw Error(ErrorKind::OddVertexCount, "no Kasteleyn orientation on " + std::to_string(map.vertex_count()) + " vertices");
  auto faces = trace_faces(map);
  Orientation k = canonical_orientation(map);
  auto report = curvature_report(map, faces, labels, k);
  auto flips = faces_flipped_by_edge(map, faces);

  // Dual adjacency through edges that separate two distinct faces.
  std::vector<std::vector<std::pair<int, int>>> dual(faces.size());
  for (int e = 0; e < map.edge_count(); ++e)
    if (flips[e].size() == 2) {
      dual[flips[e][0]].push_back({flips[e][1], e});
      dual[flips[e][1]].push_back({flips[e][0], e});
    }

  Bits curved = report.per_face;
  for (int f = 0; f < faces.size(); ++f) {
    if (!curved[f]) continue;
    // Walk to the nearest other curved face and reverse the edges on the way.
    std::vector<int> via(faces.size(), -1), prev(faces.size(), -1);
    std::vector<std::uint8_t> seen(faces.size(), 0);
    std::queue<int> todo;
    seen[f] = 1;
    todo.push(f);
    int target = -1;
    while (!todo.empty() && target < 0) {
      int g = todo.front();
      todo.pop();
      for (auto [nb, e] : dual[g]) {
        if (seen[nb]) continue;
        seen[nb] = 1;
        prev[nb] = g;
        via[nb] = e;
        if (curved[nb]) {
          target = nb;
          break;
        }
        todo.push(nb);
      }
    }
    if (target < 0) throw Error(ErrorKind::OddVertexCount, "unpaired curved face");
    for (int g = target; g != f; g = prev[g]) k[via[g]] ^= 1;
    curved[f] = curved[target] = 0;
  }
  return k;
}

Orientation flip(const Orientation& k, const Cochain1& cochain) { return xor_of(k, cochain); }

bool equivalent(const CombinatorialMap& map, const Orientation& a, const Orientation& b) {
  return is_coboundary(map, xor_of(a, b));
}

Orientation class_representative(const CombinatorialMap& map, const Orientation& k) {
  Orientation base = canonical_orientation(map);
  Bits side(map.vertex_count(), 0);
  std::vector<std::uint8_t> seen(map.vertex_count(), 0);
  std::queue<int> todo;
  seen[0] = 1;
  todo.push(0);
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int h : map.rotation(x)) {
      int y = map.anchor(M::twin(h));
      if (seen[y]) continue;
      seen[y] = 1;
      int e = M::edge_of(h);
      side[y] = side[x] ^ k[e] ^ base[e];
      todo.push(y);
    }
  }
  Orientation out = k;
  for (int e = 0; e < map.edge_count(); ++e) out[e] ^= side[map.ends(e).u] ^ side[map.ends(e).v];
  return out;
}

std::vector<Orientation> enumerate_classes(const Orientation& k, const HomologyBasis& basis) {
  std::vector<Orientation> out;
  const std::uint64_t count = std::uint64_t{1} << basis.rank();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Orientation ki = k;
    for (int i = 0; i < basis.rank(); ++i)
      if (mask_bit(mask, i)) xor_into(ki, basis.duals[i]);
    out.push_back(std::move(ki));
  }
  return out;
}

KasteleynCount count_all_kasteleyn(const CombinatorialMap& map, const Labelling& labels, int edge_limit) {
  const int E = map.edge_count();
  if (E > edge_limit || E > 62) throw Error(ErrorKind::TooLarge, std::to_string(E) + " edges");
  auto faces = trace_faces(map);
  auto flips = faces_flipped_by_edge(map, faces);
  Orientation k(E, 0);
  auto report = curvature_report(map, faces, labels, k);
  Bits curved = report.per_face;
  int curved_count = report.curved_faces;

  auto key = [&](const Orientation& o) {
    std::uint64_t m = 0;
    for (int e = 0; e < E; ++e) m |= std::uint64_t{o[e]} << e;
    return m;
  };
  KasteleynCount result;
  std::unordered_set<std::uint64_t> classes;
  const std::uint64_t total = std::uint64_t{1} << E;
  for (std::uint64_t step = 0;; ++step) {
    if (curved_count == 0) {
      ++result.orientations;
      classes.insert(key(class_representative(map, k)));
    }
    if (step + 1 == total) break;
    // Gray code: flip the edge at the lowest set bit of step+1.
    int e = __builtin_ctzll(step + 1);
    k[e] ^= 1;
    for (int f : flips[e]) {
      curved[f] ^= 1;
      curved_count += curved[f] ? 1 : -1;
    }
  }
  result.classes = classes.size();
  return result;
}

OmegaChange omega_change(const CombinatorialMap& map, const Cochain1& omega, const Labelling& labels,
                         const Orientation& k, int v) {
  OmegaChange out{xor_of(omega, vertex_coboundary(map, v)), labels.flipped_at(v), k};
  for (int h : map.rotation(v)) {
    int e = M::edge_of(h);
    if (!map.is_loop(e) && omega[e]) out.orientation[e] ^= 1;
  }
  return out;
}

}  // namespace pfdimers
