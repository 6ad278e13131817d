#include "support.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace testing_support {

Rational subset_dp_partition(const CombinatorialMap& map) {
  const int n = map.vertex_count();
  if (n % 2) return 0;
  std::vector<std::vector<std::pair<int, Rational>>> adj(n);
  for (int e = 0; e < map.edge_count(); ++e) {
    auto [u, v] = map.ends(e);
    if (u == v) continue;
    adj[u].push_back({v, map.weight(e)});
    adj[v].push_back({u, map.weight(e)});
  }
  std::unordered_map<std::uint64_t, Rational> memo;
  std::function<Rational(std::uint64_t)> solve = [&](std::uint64_t covered) -> Rational {
    if (covered == (std::uint64_t{1} << n) - 1) return 1;
    if (auto it = memo.find(covered); it != memo.end()) return it->second;
    int v = __builtin_ctzll(~covered);
    Rational total = 0;
    for (auto& [w, weight] : adj[v])
      if (!((covered >> w) & 1)) total += weight * solve(covered | (std::uint64_t{1} << v) | (std::uint64_t{1} << w));
    memo[covered] = total;
    return total;
  };
  return solve(0);
}

GaussRational pfaffian_by_matchings(const ExactMatrix& a) {
  const int n = static_cast<int>(a.rows());
  if (n % 2) return 0;
  GaussRational total(0);
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == n) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += seq[i] > seq[j];
      GaussRational term(inversions % 2 ? -1 : 1);
      for (int i = 0; i < n; i += 2) term = term * a(seq[i], seq[i + 1]);
      total = total + term;
      return;
    }
    int first = 0;
    while (used[first]) ++first;
    used[first] = 1;
    seq.push_back(first);
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      seq.push_back(j);
      rec();
      seq.pop_back();
      used[j] = 0;
    }
    seq.pop_back();
    used[first] = 0;
  };
  rec();
  return total;
}

ExactMatrix random_skew(std::mt19937_64& rng, int n, int range, bool complex_entries) {
  std::uniform_int_distribution<int> pick(-range, range);
  ExactMatrix a = ExactMatrix::Constant(n, n, GaussRational(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GaussRational x(Rational(pick(rng)), Rational(complex_entries ? pick(rng) : 0));
      a(i, j) = x;
      a(j, i) = -x;
    }
  return a;
}

TestInstance random_lattice(std::mt19937_64& rng, int max_vertices) {
  const LatticeSurface surfaces[] = {LatticeSurface::Planar, LatticeSurface::Torus, LatticeSurface::ProjectivePlane,
                                     LatticeSurface::KleinHexagon};
  for (;;) {
    auto surface = surfaces[std::uniform_int_distribution<int>(0, 3)(rng)];
    int rows = std::uniform_int_distribution<int>(2, 5)(rng);
    int cols = std::uniform_int_distribution<int>(2, 6)(rng);
    if (surface == LatticeSurface::KleinHexagon && cols % 2) ++cols;
    if (rows * cols > max_vertices) continue;
    auto inst = lattice(surface, rows, cols);
    auto map = with_weights(inst.map, random_weights(inst.map.edge_count(), rng));
    std::string label = std::string(lattice_surface_name(surface)) + " " + std::to_string(rows) + "x" + std::to_string(cols);
    return {label, map, inst.curves};
  }
}

TestInstance random_embedding(std::mt19937_64& rng, int max_vertices) {
  int v = 2 * std::uniform_int_distribution<int>(1, max_vertices / 2)(rng);
  int extra = std::uniform_int_distribution<int>(0, 5)(rng);
  double twist = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? 0.0 : 0.4;
  auto map = random_map(rng, v, extra, twist);
  map = with_weights(map, random_weights(map.edge_count(), rng));
  return {"random " + classify(map).name(), map, std::nullopt};
}

std::vector<TestInstance> small_orientable_maps() {
  std::vector<TestInstance> out;
  out.push_back({"sphere square", lattice(LatticeSurface::Planar, 2, 2).map, std::nullopt});
  // Two vertices joined by four edges, rotations chosen to give a torus.
  {
    std::vector<EdgeSpec> edges(4, EdgeSpec{0, 1, false, 1});
    out.push_back({"torus two-vertex", build_map(2, edges, {{0, 2, 4, 6}, {1, 3, 5, 7}}), std::nullopt});
  }
  out.push_back({"torus 2x2", lattice(LatticeSurface::Torus, 2, 2).map, std::nullopt});
  out.push_back({"sphere 2x3", lattice(LatticeSurface::Planar, 2, 3).map, std::nullopt});
  out.push_back({"torus 2x3", lattice(LatticeSurface::Torus, 2, 3).map, std::nullopt});
  return out;
}

CombinatorialMap projective_two_edge() {
  std::vector<EdgeSpec> edges{{0, 1, false, 1}, {0, 1, true, 1}};
  return build_map(2, edges, {{0, 2}, {1, 3}});
}

CombinatorialMap single_loop(bool twisted) {
  return build_map(1, {EdgeSpec{0, 0, twisted, 1}}, {{0, 1}});
}

}  // namespace testing_support
