#include "pfdimers/spin_quadratic.hpp"

#include "pfdimers/errors.hpp"

namespace pfdimers {

using M = CombinatorialMap;

void check_matching(const CombinatorialMap& map, const Matching& matching) {
  std::vector<int> cover(map.vertex_count(), 0);
  for (int e : matching) {
    if (e < 0 || e >= map.edge_count()) throw Error(ErrorKind::NotAMatching, "unknown edge " + std::to_string(e));
    if (map.is_loop(e)) throw Error(ErrorKind::NotAMatching, "loop in matching");
    ++cover[map.ends(e).u];
    ++cover[map.ends(e).v];
  }
  for (int v = 0; v < map.vertex_count(); ++v)
    if (cover[v] != 1)
      throw Error(ErrorKind::NotAMatching, "vertex " + std::to_string(v) + " covered " + std::to_string(cover[v]) + " times");
}

std::vector<int> matched_half_edges(const CombinatorialMap& map, const Matching& matching) {
  check_matching(map, matching);
  std::vector<int> out(map.vertex_count(), -1);
  for (int e : matching) {
    out[map.ends(e).u] = M::half_edge(e, 0);
    out[map.ends(e).v] = M::half_edge(e, 1);
  }
  return out;
}

int matching_sign(const CombinatorialMap& map, const Orientation& k, const Matching& matching,
                  const std::vector<int>& vertex_order) {
  check_matching(map, matching);
  const int n = map.vertex_count();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[vertex_order.empty() ? i : vertex_order[i]] = i;
  std::vector<int> perm;
  perm.reserve(n);
  for (int e : matching) {
    perm.push_back(position[tail(map, k, e)]);
    perm.push_back(position[head(map, k, e)]);
  }
  int sign = 1;
  std::vector<std::uint8_t> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int count_against(const CombinatorialMap&, const Orientation& k, const ClosedWalk& walk) {
  int n = 0;
  for (int h : walk.steps) n += (k[M::edge_of(h)] & 1) != M::side_of(h);
  return n;
}

int count_side_dimers(const CombinatorialMap& map, const Labelling& labels, const Matching& matching,
                      const ClosedWalk& walk) {
  auto dimer = matched_half_edges(map, matching);
  const int L = walk.length();
  int count = 0;
  for (int k = 0; k < L; ++k) {
    int out_h = walk.steps[k];
    int in_h = M::twin(walk.steps[(k + L - 1) % L]);
    int x = map.anchor(out_h);
    int d = dimer[x];
    if (d == in_h || d == out_h) continue;
    bool left = false;
    for (int h = map.succ(out_h); h != in_h && h != out_h; h = map.succ(h))
      if (h == d) {
        left = true;
        break;
      }
    count += (left ? 1 : 0) ^ labels.minus_on_sheet0[x] ^ (labels.reversed ? 1 : 0);
  }
  return count;
}

int quad_enhancement(const CombinatorialMap& map, const Cochain1& omega, const Labelling& labels,
                     const Orientation& k, const Matching& matching, const ClosedWalk& walk) {
  check_simple(map, walk);
  Bits in_matching(map.edge_count(), 0);
  for (int e : matching) in_matching[e] = 1;
  int omega_on = 0, omega_off = 0;
  for (int h : walk.steps) {
    int e = M::edge_of(h);
    if (!omega[e]) continue;
    if (in_matching[e]) ++omega_on;
    else ++omega_off;
  }
  int n = count_against(map, k, walk);
  int side = count_side_dimers(map, labels, matching, walk);
  int q = 2 * (n + side + 1) + omega_on - omega_off;
  return ((q % 4) + 4) % 4;
}

int QuadraticForm::operator()(const Bits& x) const {
  int q = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!x[i]) continue;
    q += basis_values[i];
    for (int j = i + 1; j < rank(); ++j)
      if (x[j] && (gram(i, j) & 1)) q += 2;
  }
  return q % 4;
}

int QuadraticForm::operator()(std::uint64_t mask) const {
  Bits x(rank(), 0);
  for (int i = 0; i < rank(); ++i) x[i] = static_cast<std::uint8_t>(mask_bit(mask, i));
  return (*this)(x);
}

QuadraticForm QuadraticForm::shifted(const Bits& phi) const {
  QuadraticForm out = *this;
  for (int i = 0; i < rank(); ++i) out.basis_values[i] = (basis_values[i] + 2 * (phi[i] & 1)) % 4;
  return out;
}

QuadraticForm quadratic_form(const CombinatorialMap& map, const Cochain1& omega, const Labelling& labels,
                             const Orientation& k, const Matching& matching, const HomologyBasis& basis) {
  QuadraticForm q;
  q.gram = basis.gram;
  for (const auto& c : basis.cycles) q.basis_values.push_back(quad_enhancement(map, omega, labels, k, matching, c));
  return q;
}

QuadraticForm basis_normalized(const QuadraticForm& q, const Matching& matching, const HomologyBasis& basis) {
  Bits phi(basis.rank(), 0);
  for (int i = 0; i < basis.rank(); ++i)
    for (int e : matching) phi[i] ^= basis.pushoffs[i][e];
  return q.shifted(phi);
}

GaussianInteger gauss_sum(const QuadraticForm& q) {
  if (q.rank() > 40) throw Error(ErrorKind::TooLarge, "Gauss sum over 2^" + std::to_string(q.rank()) + " classes");
  GaussianInteger g;
  const std::uint64_t count = std::uint64_t{1} << q.rank();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    switch (q(mask)) {
      case 0: ++g.re; break;
      case 1: ++g.im; break;
      case 2: --g.re; break;
      default: --g.im; break;
    }
  }
  return g;
}

int brown(const QuadraticForm& q) {
  auto g = gauss_sum(q);
  const std::int64_t scale = std::int64_t{1} << (q.rank() / 2);
  if (g.re % scale != 0 || g.im % scale != 0) throw Error(ErrorKind::DegenerateForm, "Gauss sum has the wrong modulus");
  std::int64_t re = g.re / scale, im = g.im / scale;
  if (q.rank() % 2 == 0) {
    if (re == 1 && im == 0) return 0;
    if (re == 0 && im == 1) return 2;
    if (re == -1 && im == 0) return 4;
    if (re == 0 && im == -1) return 6;
  } else {
    if (re == 1 && im == 1) return 1;
    if (re == -1 && im == 1) return 3;
    if (re == -1 && im == -1) return 5;
    if (re == 1 && im == -1) return 7;
  }
  throw Error(ErrorKind::DegenerateForm, "Gauss sum has the wrong modulus");
}

int arf(const QuadraticForm& q) {
  const std::uint64_t count = std::uint64_t{1} << q.rank();
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (q(mask) % 2 != 0) throw Error(ErrorKind::NotOrientableForm, "form takes odd values");
  return brown(q) == 0 ? 0 : 1;
}

QuadraticForm translated(const QuadraticForm& q, const Bits& y) {
  Bits phi(q.rank(), 0);
  for (int i = 0; i < q.rank(); ++i)
    for (int j = 0; j < q.rank(); ++j) phi[i] ^= q.gram(i, j) & y[j] & 1;
  return q.shifted(phi);
}

int brown_shift(const QuadraticForm& q, const Bits& x, ShiftSign sign) {
  int delta = 2 * q(x);
  int b = brown(q);
  return ((sign == ShiftSign::Corrected ? b - delta : b + delta) % 8 + 8) % 8;
}

}  // namespace pfdimers
