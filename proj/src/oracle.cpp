#include "pfdimers/oracle.hpp"

#include "pfdimers/errors.hpp"

namespace pfdimers {

using M = CombinatorialMap;

namespace {

struct Search {
  const CombinatorialMap& map;
  std::vector<std::uint8_t> used;
  Matching current;
  const std::function<bool(const Matching&)>& visit;  // returns false to stop
  bool stopped = false;

  void run(int from) {
    if (stopped) return;
    int v = from;
    while (v < map.vertex_count() && used[v]) ++v;
    if (v == map.vertex_count()) {
      if (!visit(current)) stopped = true;
      return;
    }
    used[v] = 1;
    for (int h : map.rotation(v)) {
      int e = M::edge_of(h);
      int w = map.anchor(M::twin(h));
      if (w == v || used[w]) continue;
      used[w] = 1;
      current.push_back(e);
      run(v + 1);
      current.pop_back();
      used[w] = 0;
      if (stopped) break;
    }
    used[v] = 0;
  }
};

void search(const CombinatorialMap& map, const std::function<bool(const Matching&)>& visit) {
  if (map.vertex_count() % 2 != 0) return;
  Search s{map, std::vector<std::uint8_t>(map.vertex_count(), 0), {}, visit};
  s.run(0);
}

}  // namespace

void enumerate_matchings(const CombinatorialMap& map, const std::function<void(const Matching&)>& visit,
                         int max_vertices) {
  if (map.vertex_count() > max_vertices)
    throw Error(ErrorKind::TooLarge, std::to_string(map.vertex_count()) + " vertices exceeds the oracle limit of " +
                                         std::to_string(max_vertices));
  search(map, [&](const Matching& m) {
    visit(m);
    return true;
  });
}

Rational matching_weight(const CombinatorialMap& map, const Matching& matching) {
  Rational w = 1;
  for (int e : matching) w *= map.weight(e);
  return w;
}

Rational partition_bruteforce(const CombinatorialMap& map, int max_vertices) {
  Rational z = 0;
  enumerate_matchings(map, [&](const Matching& m) { z += matching_weight(map, m); }, max_vertices);
  return z;
}

std::uint64_t count_matchings(const CombinatorialMap& map, int max_vertices) {
  std::uint64_t n = 0;
  enumerate_matchings(map, [&](const Matching&) { ++n; }, max_vertices);
  return n;
}

std::optional<Matching> find_matching(const CombinatorialMap& map) {
  // Edmonds' blossom algorithm on the simple graph underlying the map.
  const int n = map.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  std::vector<std::vector<int>> adj(n);
  for (int e = 0; e < map.edge_count(); ++e)
    if (!map.is_loop(e)) {
      adj[map.ends(e).u].push_back(map.ends(e).v);
      adj[map.ends(e).v].push_back(map.ends(e).u);
    }
  std::vector<int> match(n, -1), parent(n), base(n), queue;
  std::vector<std::uint8_t> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<std::uint8_t> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    queue.assign(1, root);
    for (std::size_t qh = 0; qh < queue.size(); ++qh) {
      int v = queue[qh];
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int end = find_path(v);
    if (end == -1) return std::nullopt;
    while (end != -1) {
      int pv = parent[end], next = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = next;
    }
  }
  Matching out;
  for (int e = 0; e < map.edge_count(); ++e) {
    int u = map.ends(e).u, v = map.ends(e).v;
    if (u != v && match[u] == v) {
      out.push_back(e);
      match[u] = match[v] = -1;
    }
  }
  return out;
}

std::vector<Rational> homology_buckets(const CombinatorialMap& map, const Matching& reference,
                                       const HomologyBasis& basis, int max_vertices) {
  std::vector<Rational> buckets(std::size_t{1} << basis.rank(), Rational(0));
  Bits ref(map.edge_count(), 0);
  for (int e : reference) ref[e] ^= 1;
  enumerate_matchings(
      map,
      [&](const Matching& m) {
        Bits chain = ref;
        for (int e : m) chain[e] ^= 1;
        std::size_t index = 0;
        auto x = basis.coordinates(chain);
        for (int i = 0; i < basis.rank(); ++i) index |= std::size_t{x[i]} << i;
        buckets[index] += matching_weight(map, m);
      },
      max_vertices);
  return buckets;
}

}  // namespace pfdimers
