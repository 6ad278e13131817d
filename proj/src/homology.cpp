#include "pfdimers/homology.hpp"

#include <algorithm>
#include <queue>

#include "pfdimers/errors.hpp"

namespace pfdimers {

using M = CombinatorialMap;

Chain1 face_boundary_chain(const CombinatorialMap& map, const Face& face) {
  Chain1 c(map.edge_count(), 0);
  for (const auto& step : face) c[M::edge_of(step.half_edge)] ^= 1;
  return c;
}

bool is_cycle(const CombinatorialMap& map, const Chain1& chain) {
  std::vector<int> degree(map.vertex_count(), 0);
  for (int e = 0; e < map.edge_count(); ++e)
    if (chain[e]) {
      degree[map.ends(e).u] ^= 1;
      degree[map.ends(e).v] ^= 1;
    }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 0; });
}

bool is_cocycle(const CombinatorialMap& map, const FaceSet& faces, const Cochain1& cochain) {
  for (const auto& f : faces.faces)
    if (dot(face_boundary_chain(map, f), cochain)) return false;
  return true;
}

std::optional<Bits> coboundary_preimage(const CombinatorialMap& map, const Cochain1& cochain) {
  Bits side(map.vertex_count(), 0);
  std::vector<std::uint8_t> done(map.vertex_count(), 0);
  std::queue<int> todo;
  done[0] = 1;
  todo.push(0);
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int h : map.rotation(x)) {
      int y = map.anchor(M::twin(h));
      if (!done[y]) {
        done[y] = 1;
        side[y] = side[x] ^ (cochain[M::edge_of(h)] & 1);
        todo.push(y);
      }
    }
  }
  for (int e = 0; e < map.edge_count(); ++e)
    if ((side[map.ends(e).u] ^ side[map.ends(e).v]) != (cochain[e] & 1)) return std::nullopt;
  return side;
}

bool is_coboundary(const CombinatorialMap& map, const Cochain1& cochain) {
  return coboundary_preimage(map, cochain).has_value();
}

Cochain1 vertex_coboundary(const CombinatorialMap& map, int v) {
  Cochain1 c(map.edge_count(), 0);
  for (int h : map.rotation(v)) c[M::edge_of(h)] ^= 1;  // loops cancel
  return c;
}

int evaluate(const Cochain1& cochain, const ClosedWalk& walk) {
  int s = 0;
  for (int h : walk.steps) s ^= cochain[M::edge_of(h)] & 1;
  return s;
}

Cochain1 pushoff_cochain(const CombinatorialMap& map, const ClosedWalk& walk, int start_sheet) {
  check_closed(map, walk);
  Cochain1 out(map.edge_count(), 0);
  const int L = walk.length();
  int sheet = start_sheet & 1;
  for (int k = 0; k < L; ++k) {
    int out_h = walk.steps[k];
    int in_h = M::twin(walk.steps[(k + L - 1) % L]);
    // Half-edges strictly between, walking counterclockwise in the chart.
    int from = sheet == 0 ? out_h : in_h;
    int to = sheet == 0 ? in_h : out_h;
    for (int h = map.succ(from); h != to && h != from; h = map.succ(h)) out[M::edge_of(h)] ^= 1;
    sheet ^= map.twists()[M::edge_of(out_h)];
  }
  if (sheet != (start_sheet & 1)) out[M::edge_of(walk.steps[L - 1])] ^= 1;
  return out;
}

int intersection_number(const CombinatorialMap& map, const ClosedWalk& a, const ClosedWalk& b) {
  return evaluate(pushoff_cochain(map, a), b);
}

Bits HomologyBasis::coordinates(const Chain1& cycle) const {
  Bits x(rank(), 0);
  for (int i = 0; i < rank(); ++i) x[i] = dot(duals[i], cycle);
  return x;
}

Bits HomologyBasis::coordinates(const ClosedWalk& walk) const {
  Bits x(rank(), 0);
  for (int i = 0; i < rank(); ++i) x[i] = evaluate(duals[i], walk);
  return x;
}

int HomologyBasis::intersection(const Bits& x, const Bits& y) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s ^= x[i] & y[j] & gram(i, j);
  return s;
}

namespace {

int left_sheet(const CombinatorialMap& map, const Labelling& labels, const ClosedWalk& walk) {
  return labels.minus_on_sheet0[map.anchor(walk.steps.front())] ^ (labels.reversed ? 1 : 0);
}

struct SpanningTree {
  std::vector<int> parent_half;  // half-edge at v toward its parent, -1 at root
  std::vector<int> depth;
  Bits tree_edge;
};

SpanningTree bfs_tree(const CombinatorialMap& map, int root) {
  SpanningTree t;
  t.parent_half.assign(map.vertex_count(), -1);
  t.depth.assign(map.vertex_count(), -1);
  t.tree_edge.assign(map.edge_count(), 0);
  std::queue<int> todo;
  t.depth[root] = 0;
  todo.push(root);
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int h : map.rotation(x)) {
      int y = map.anchor(M::twin(h));
      if (t.depth[y] < 0) {
        t.depth[y] = t.depth[x] + 1;
        t.parent_half[y] = M::twin(h);
        t.tree_edge[M::edge_of(h)] = 1;
        todo.push(y);
      }
    }
  }
  return t;
}

// Cycle through the tree closed by the non-tree half-edge h (from u to v).
ClosedWalk fundamental_cycle(const CombinatorialMap& map, const SpanningTree& t, int h) {
  int u = map.anchor(h), v = map.anchor(M::twin(h));
  std::vector<int> up_from_v, up_from_u;
  int a = v, b = u;
  while (a != b) {
    if (t.depth[a] >= t.depth[b]) {
      up_from_v.push_back(t.parent_half[a]);
      a = map.anchor(M::twin(t.parent_half[a]));
    } else {
      up_from_u.push_back(t.parent_half[b]);
      b = map.anchor(M::twin(t.parent_half[b]));
    }
  }
  ClosedWalk w;
  w.steps = up_from_v;
  for (auto it = up_from_u.rbegin(); it != up_from_u.rend(); ++it) w.steps.push_back(M::twin(*it));
  w.steps.push_back(h);
  return w;
}

std::vector<ClosedWalk> fundamental_cycles(const CombinatorialMap& map, int root) {
  auto t = bfs_tree(map, root);
  std::vector<ClosedWalk> out;
  for (int e = 0; e < map.edge_count(); ++e)
    if (!t.tree_edge[e]) out.push_back(fundamental_cycle(map, t, M::half_edge(e, 0)));
  std::stable_sort(out.begin(), out.end(),
                   [](const ClosedWalk& a, const ClosedWalk& b) { return a.length() < b.length(); });
  return out;
}

}  // namespace

HomologyBasis basis_from_cycles(const CombinatorialMap& map, const Labelling& labels,
                                std::vector<ClosedWalk> cycles) {
  HomologyBasis basis;
  basis.cycles = std::move(cycles);
  const int n = basis.rank();
  for (const auto& c : basis.cycles) basis.pushoffs.push_back(pushoff_cochain(map, c, left_sheet(map, labels, c)));
  basis.gram = Z2Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis.gram(i, j) = static_cast<std::uint8_t>(evaluate(basis.pushoffs[i], basis.cycles[j]));
  auto inverse = z2_inverse(basis.gram);
  if (!inverse) throw Error(ErrorKind::DegenerateForm, "cycles do not form a homology basis");
  for (int i = 0; i < n; ++i) {
    Cochain1 phi(map.edge_count(), 0);
    for (int k = 0; k < n; ++k)
      if ((*inverse)(i, k) & 1) xor_into(phi, basis.pushoffs[k]);
    basis.duals.push_back(std::move(phi));
  }
  return basis;
}

HomologyBasis cycle_basis(const CombinatorialMap& map, const Labelling& labels, int root) {
  auto faces = trace_faces(map);
  const int b1 = 2 - euler_characteristic(map, faces);
  Z2Eliminator span(map.edge_count());
  for (const auto& f : faces.faces) span.insert(face_boundary_chain(map, f));
  std::vector<ClosedWalk> chosen;
  for (auto& c : fundamental_cycles(map, root)) {
    if (static_cast<int>(chosen.size()) == b1) break;
    if (span.insert(walk_chain(map, c))) chosen.push_back(std::move(c));
  }
  return basis_from_cycles(map, labels, std::move(chosen));
}

HomologyBasis cycle_basis(const CombinatorialMap& map) {
  return cycle_basis(map, vertex_labels(map, map.twists()));
}

std::vector<ClosedWalk> enumerate_simple_cycles(const CombinatorialMap& map, std::size_t cap) {
  std::vector<ClosedWalk> out;
  const int n = map.vertex_count();
  std::vector<std::uint8_t> on_path(n, 0);
  std::vector<int> steps;
  // Cycles are rooted at their smallest vertex.
  auto dfs = [&](auto&& self, int start, int x) -> void {
    for (int h : map.rotation(x)) {
      if (out.size() >= cap) return;
      int y = map.anchor(M::twin(h));
      if (y == start) {
        if (steps.size() == 1 && M::edge_of(steps[0]) == M::edge_of(h)) continue;
        if (steps.empty() && !map.is_loop(M::edge_of(h))) continue;
        ClosedWalk w;
        w.steps = steps;
        w.steps.push_back(h);
        out.push_back(std::move(w));
        continue;
      }
      if (y < start || on_path[y]) continue;
      on_path[y] = 1;
      steps.push_back(h);
      self(self, start, y);
      steps.pop_back();
      on_path[y] = 0;
    }
  };
  for (int s = 0; s < n && out.size() < cap; ++s) {
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  return out;
}

std::vector<const Curve*> CurveSet::of_kind(CurveKind kind) const {
  std::vector<const Curve*> out;
  for (const auto& c : curves)
    if (c.kind == kind) out.push_back(&c);
  return out;
}

Curve companion_curve(const CombinatorialMap& map, const Labelling& labels, CurveKind kind, std::string name,
                      const ClosedWalk& core) {
  try {
    check_simple(map, core);
  } catch (const Error& err) {
    throw Error(ErrorKind::CurveNotRealizable, std::string("companion is not a simple closed walk: ") + err.what());
  }
  Curve c;
  c.kind = kind;
  c.name = std::move(name);
  c.companion = core;
  c.crossing = pushoff_cochain(map, core, left_sheet(map, labels, core));
  return c;
}

void check_curves(const CombinatorialMap& map, const CurveSet& curves) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::CurveNotRealizable, why); };
  const int E = map.edge_count();
  if (static_cast<int>(curves.omega.size()) != E) fail("omega has the wrong length");
  auto faces = trace_faces(map);
  Cochain1 beta_sum(E, 0);
  for (const auto& c : curves.curves) {
    if (static_cast<int>(c.crossing.size()) != E) fail("curve " + c.name + " has the wrong length");
    if (!is_cocycle(map, faces, c.crossing)) fail("curve " + c.name + " does not close up");
    try {
      check_simple(map, c.companion);
    } catch (const Error& err) {
      fail("companion of " + c.name + ": " + err.what());
    }
    if (c.kind == CurveKind::Beta) xor_into(beta_sum, c.crossing);
  }
  if (beta_sum != curves.omega) fail("omega is not the sum of the beta curves");
  for (const auto& c : curves.curves) {
    for (int h : c.companion.steps)
      if (c.kind == CurveKind::Alpha && curves.omega[M::edge_of(h)]) fail("companion of " + c.name + " meets omega");
    for (const auto& other : curves.curves) {
      if (other.kind != CurveKind::Beta) continue;
      int crossings = 0;
      for (int h : c.companion.steps) crossings += other.crossing[M::edge_of(h)];
      int wanted = &other == &c ? 1 : 0;
      if (crossings != wanted)
        fail("companion of " + c.name + " crosses " + other.name + " " + std::to_string(crossings) + " times");
    }
  }
}

namespace {

std::vector<ClosedWalk> candidate_cycles(const CombinatorialMap& map) {
  std::vector<ClosedWalk> pool;
  if (map.vertex_count() <= 40) pool = enumerate_simple_cycles(map, 20000);
  for (int r = 0; r < map.vertex_count(); ++r)
    for (auto& c : fundamental_cycles(map, r)) pool.push_back(std::move(c));
  std::stable_sort(pool.begin(), pool.end(),
                   [](const ClosedWalk& a, const ClosedWalk& b) { return a.length() < b.length(); });
  return pool;
}

}  // namespace

CurveSet derive_curves(const CombinatorialMap& map) {
  auto surface = classify(map);
  CurveSet out;
  out.omega.assign(map.edge_count(), 0);
  if (surface.orientable()) {
    auto labels = vertex_labels(map, out.omega);
    auto basis = cycle_basis(map, labels);
    for (int i = 0; i < basis.rank(); ++i)
      out.curves.push_back(companion_curve(map, labels, CurveKind::Alpha, "a" + std::to_string(i + 1), basis.cycles[i]));
    return out;
  }
  if (surface.b1 > 2)
    throw Error(ErrorKind::CurveNotRealizable, "no automatic curve data for " + surface.name());

  auto labels = vertex_labels(map, map.twists());
  std::vector<ClosedWalk> one_sided;
  for (auto& c : candidate_cycles(map))
    if (walk_twist(map, c) && is_vertex_simple(map, c)) one_sided.push_back(std::move(c));
  if (one_sided.empty()) throw Error(ErrorKind::CurveNotRealizable, "no one-sided simple cycle");

  if (surface.b1 == 1) {
    out.curves.push_back(companion_curve(map, labels, CurveKind::Beta, "b1", one_sided.front()));
  } else {
    const std::size_t limit = std::min<std::size_t>(one_sided.size(), 3000);
    bool found = false;
    for (std::size_t i = 0; i < limit && !found; ++i) {
      Bits used(map.vertex_count(), 0);
      for (int v : walk_vertices(map, one_sided[i])) used[v] = 1;
      for (std::size_t j = i + 1; j < limit && !found; ++j) {
        auto vs = walk_vertices(map, one_sided[j]);
        if (std::any_of(vs.begin(), vs.end(), [&](int v) { return used[v] != 0; })) continue;
        out.curves.push_back(companion_curve(map, labels, CurveKind::Beta, "b1", one_sided[i]));
        out.curves.push_back(companion_curve(map, labels, CurveKind::Beta, "b2", one_sided[j]));
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::CurveNotRealizable, "no pair of disjoint one-sided cycles");
  }
  for (const auto& c : out.curves) xor_into(out.omega, c.crossing);
  check_curves(map, out);
  return out;
}

}  // namespace pfdimers
