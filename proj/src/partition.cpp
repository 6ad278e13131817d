#include "pfdimers/partition.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "pfdimers/errors.hpp"
#include "pfdimers/oracle.hpp"
#include "pfdimers/pfaffian.hpp"

namespace pfdimers {

using M = CombinatorialMap;

std::optional<Method> parse_method(std::string_view name) {
  if (name == "auto") return Method::Auto;
  if (name == "practical") return Method::Practical;
  if (name == "pin") return Method::Pin;
  if (name == "spin") return Method::Spin;
  if (name == "oracle") return Method::Oracle;
  return std::nullopt;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::Auto: return "auto";
    case Method::Practical: return "practical";
    case Method::Pin: return "pin";
    case Method::Spin: return "spin";
    case Method::Oracle: return "oracle";
  }
  return "";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "float") return Backend::Float;
  if (name == "exact") return Backend::Exact;
  return std::nullopt;
}

std::string_view backend_name(Backend backend) { return backend == Backend::Float ? "float" : "exact"; }

std::string PartitionResult::value_string() const {
  if (exact) return to_string(*exact);
  std::ostringstream out;
  out.precision(15);
  out << value;
  return out.str();
}

namespace {

std::atomic<int> g_threads{0};

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (int t = g_threads.load(); t > 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class Body>
void parallel_for(int count, int threads, Body&& body) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::string mask_label(std::uint64_t mask, int bits) {
  std::string s;
  for (int i = 0; i < bits; ++i) s += mask_bit(mask, i) ? '1' : '0';
  return s.empty() ? "-" : s;
}

Rational power_of_two_inverse(int k) {
  mpz_class den = 1;
  den <<= k;
  return Rational(mpz_class(1), den);
}

std::string scalar_string(const Complex& z) {
  std::ostringstream out;
  out.precision(15);
  if (z.imag() == 0.0) out << z.real();
  else out << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
  return out.str();
}
std::string scalar_string(const GaussRational& z) { return to_string(z); }

// Values extracted from one Pfaffian evaluation.
template <class Scalar>
struct Evaluated {
  Scalar value;
  bool ill_conditioned = false;
};

template <class Scalar>
Evaluated<Scalar> pfaffian_of(const CombinatorialMap& map, const Cochain1& omega, const Orientation& k) {
  PfaffianDiagnostics diag;
  Scalar pf = pfaffian<Scalar>(build_adjacency<Scalar>(map, omega, k), &diag);
  return {pf, diag.ill_conditioned};
}

template <class Scalar>
void finish(PartitionResult& result, const Scalar& total, const Rational& scale, bool take_abs,
            bool require_real) {
  if constexpr (ScalarTraits<Scalar>::exact) {
    if (require_real && sgn(total.im) != 0)
      throw Error(ErrorKind::NonRealResult, "imaginary part " + to_string(total.im));
    Rational z = total.re * scale;
    if (take_abs && sgn(z) < 0) z = -z;
    if (sgn(z) < 0) throw Error(ErrorKind::NonRealResult, "negative result " + to_string(z));
    result.exact = z;
    result.value = z.get_d();
  } else {
    double z = total.real() * scale.get_d();
    if (take_abs) z = std::abs(z);
    result.value = z;
  }
}

Labelling labels_for(const CombinatorialMap& map, const Cochain1& omega, const PartitionOptions& options) {
  auto labels = vertex_labels(map, omega);
  return options.swap_labels ? labels.swapped() : labels;
}

Orientation seed_orientation(const CombinatorialMap& map, const Labelling& labels, const PartitionOptions& options) {
  if (!options.seed) return construct_kasteleyn(map, labels);
  if (!is_kasteleyn(map, trace_faces(map), labels, *options.seed))
    throw Error(ErrorKind::WrongSurfaceType, "seed orientation is not Kasteleyn for this cocycle");
  return *options.seed;
}

PartitionResult base_result(const CombinatorialMap& map, Method method, const PartitionOptions& options) {
  PartitionResult r;
  r.method = method;
  r.backend = options.backend;
  auto surface = classify(map);
  r.b1 = surface.b1;
  r.surface = surface.name();
  return r;
}

void set_zero(PartitionResult& r) {
  if (r.backend == Backend::Exact) r.exact = Rational(0);
  r.value = 0.0;
}

// Sum over classes of the pin (or spin) formula.
template <class Scalar>
void pin_sum(const CombinatorialMap& map, const Cochain1& omega, const Labelling& labels, const Orientation& seed,
             const Matching& reference, bool spin, const PartitionOptions& options, PartitionResult& result) {
  using T = ScalarTraits<Scalar>;
  auto basis = cycle_basis(map, labels);
  auto classes = enumerate_classes(seed, basis);
  const int count = static_cast<int>(classes.size());
  std::vector<Scalar> contribution(count);
  std::vector<std::string> coefficient(count), pf_text(count);
  std::vector<std::uint8_t> ill(count, 0);
  parallel_for(count, resolve_threads(options.threads), [&](int i) {
    auto q = quadratic_form(map, omega, labels, classes[i], reference, basis);
    Scalar weight;
    if (spin) {
      int a = arf(q);
      weight = Scalar(a == 0 ? 1 : -1);
      // 2^g (-1)^Arf is the real Gauss sum; the 2^g is folded into the scale.
      coefficient[i] = a == 0 ? "1" : "-1";
    } else {
      brown(q);  // checks the modulus
      auto g = gauss_sum(q);
      weight = T::from(Rational(g.re)) + T::from(Rational(g.im)) * T::i_power(1);
      coefficient[i] = std::to_string(g.re) + (g.im >= 0 ? "+" : "") + std::to_string(g.im) + "i";
    }
    auto pf = pfaffian_of<Scalar>(map, omega, classes[i]);
    ill[i] = pf.ill_conditioned;
    pf_text[i] = scalar_string(pf.value);
    Scalar sign(matching_sign(map, classes[i], reference));
    contribution[i] = weight * sign * pf.value;
  });
  Scalar total(0);
  for (int i = 0; i < count; ++i) {
    total = total + contribution[i];
    result.terms.push_back({mask_label(i, basis.rank()), coefficient[i], pf_text[i]});
    result.ill_conditioned |= ill[i] != 0;
  }
  int omega_on_reference = 0;
  for (int e : reference) omega_on_reference += omega[e];
  total = total * T::i_power(-omega_on_reference);
  const int b1 = basis.rank();
  finish<Scalar>(result, total, power_of_two_inverse(spin ? b1 / 2 : b1), false, true);
}

PartitionResult pin_like(const CombinatorialMap& map, const PartitionOptions& options, bool spin) {
  auto result = base_result(map, spin ? Method::Spin : Method::Pin, options);
  if (spin && !is_orientable(map)) throw Error(ErrorKind::WrongSurfaceType, "spin formula needs an orientable surface");
  Cochain1 omega = spin ? Cochain1(map.edge_count(), 0) : options.omega.value_or(map.twists());
  auto labels = labels_for(map, omega, options);
  if (map.vertex_count() % 2 != 0) {
    set_zero(result);
    return result;
  }
  std::optional<Matching> reference = options.reference;
  if (reference) check_matching(map, *reference);
  else reference = find_matching(map);
  if (!reference) {
    set_zero(result);
    return result;
  }
  auto seed = seed_orientation(map, labels, options);
  if (options.backend == Backend::Exact)
    pin_sum<GaussRational>(map, omega, labels, seed, *reference, spin, options, result);
  else
    pin_sum<Complex>(map, omega, labels, seed, *reference, spin, options, result);
  return result;
}

// The practical sums over the alpha classes.
template <class Scalar>
void practical_sum(const CombinatorialMap& map, const CurveSet& curves, const Orientation& k,
                   const PartitionOptions& options, PartitionResult& result) {
  auto alphas = curves.of_kind(CurveKind::Alpha);
  auto betas = curves.of_kind(CurveKind::Beta);
  const int n = static_cast<int>(alphas.size());
  const int count = 1 << n;
  const bool even_euler = betas.size() == 2;
  std::vector<Scalar> contribution(count);
  std::vector<std::string> coefficient(count), pf_text(count);
  std::vector<std::uint8_t> ill(count, 0);
  parallel_for(count, resolve_threads(options.threads), [&](int mask) {
    Orientation ke = k;
    int sign_parity = 0;
    for (int i = 0; i < n; ++i) {
      if (!mask_bit(mask, i)) continue;
      xor_into(ke, alphas[i]->crossing);
      for (int j = i + 1; j < n; ++j)
        if (mask_bit(mask, j)) sign_parity ^= evaluate(alphas[i]->crossing, alphas[j]->companion);
    }
    const int sign = sign_parity ? -1 : 1;
    coefficient[mask] = std::to_string(sign);
    auto pf = pfaffian_of<Scalar>(map, curves.omega, ke);
    ill[mask] = pf.ill_conditioned;
    Scalar value;
    if (betas.empty()) {
      value = pf.value;
      pf_text[mask] = scalar_string(pf.value);
    } else if (!even_euler) {
      if constexpr (ScalarTraits<Scalar>::exact) value = Scalar(pf.value.re + pf.value.im);
      else value = Scalar(pf.value.real() + pf.value.imag());
      pf_text[mask] = scalar_string(pf.value);
    } else {
      auto kprime = xor_of(ke, betas[0]->crossing);
      auto pf2 = pfaffian_of<Scalar>(map, curves.omega, kprime);
      ill[mask] |= pf2.ill_conditioned;
      if constexpr (ScalarTraits<Scalar>::exact) value = Scalar(pf.value.im + pf2.value.re);
      else value = Scalar(pf.value.imag() + pf2.value.real());
      pf_text[mask] = scalar_string(pf.value) + " " + scalar_string(pf2.value);
    }
    contribution[mask] = Scalar(sign) * value;
  });
  Scalar total(0);
  for (int i = 0; i < count; ++i) {
    total = total + contribution[i];
    result.terms.push_back({mask_label(i, n), coefficient[i], pf_text[i]});
    result.ill_conditioned |= ill[i] != 0;
  }
  finish<Scalar>(result, total, power_of_two_inverse(n / 2), true, false);
}

}  // namespace

void set_default_threads(int threads) { g_threads.store(std::max(0, threads)); }
int default_threads() { return resolve_threads(0); }

Orientation normalize_orientation(const CombinatorialMap& map, const Orientation& k, const CurveSet& curves) {
  const int n = static_cast<int>(curves.curves.size());
  if (n == 0) return k;
  Z2Matrix system(n, n);
  Bits rhs(n, 0);
  for (int g = 0; g < n; ++g) {
    const auto& walk = curves.curves[g].companion;
    rhs[g] = static_cast<std::uint8_t>((count_against(map, k, walk) + 1) & 1);
    for (int h = 0; h < n; ++h) system(g, h) = static_cast<std::uint8_t>(evaluate(curves.curves[h].crossing, walk));
  }
  auto flips = z2_solve(system, rhs);
  if (!flips) throw Error(ErrorKind::CurveNotRealizable, "companion parities cannot be normalized");
  Orientation out = k;
  for (int h = 0; h < n; ++h)
    if ((*flips)[h]) xor_into(out, curves.curves[h].crossing);
  return out;
}

Orientation normalize_enhancement(const CombinatorialMap& map, const Labelling& labels, const Orientation& k,
                                  const CurveSet& curves, const Matching& matching) {
  const int n = static_cast<int>(curves.curves.size());
  if (n == 0) return k;
  Z2Matrix system(n, n);
  Bits rhs(n, 0);
  for (int g = 0; g < n; ++g) {
    const auto& curve = curves.curves[g];
    int crossing_dimers = 0;
    for (int e : matching) crossing_dimers += curve.crossing[e];
    int value = (quad_enhancement(map, curves.omega, labels, k, matching, curve.companion) + 2 * crossing_dimers) % 4;
    int target = curve.kind == CurveKind::Alpha ? 0 : 3;
    if ((value - target) % 2 != 0)
      throw Error(ErrorKind::CurveNotRealizable, "companion of " + curve.name + " has the wrong self-intersection");
    rhs[g] = static_cast<std::uint8_t>(value != target);
    for (int h = 0; h < n; ++h) system(g, h) = static_cast<std::uint8_t>(evaluate(curves.curves[h].crossing, curve.companion));
  }
  auto flips = z2_solve(system, rhs);
  if (!flips) throw Error(ErrorKind::CurveNotRealizable, "curve values cannot be normalized");
  Orientation out = k;
  for (int h = 0; h < n; ++h)
    if ((*flips)[h]) xor_into(out, curves.curves[h].crossing);
  return out;
}

namespace {

PartitionResult practical(const CombinatorialMap& map, const PartitionOptions& options, bool orientable) {
  auto result = base_result(map, Method::Practical, options);
  auto surface = classify(map);
  if (surface.orientable() != orientable)
    throw Error(ErrorKind::WrongSurfaceType, "practical formula for the other surface kind");
  if (map.vertex_count() % 2 != 0) {
    set_zero(result);
    return result;
  }
  CurveSet curves = options.curves ? *options.curves : derive_curves(map);
  check_curves(map, curves);
  auto alphas = curves.of_kind(CurveKind::Alpha);
  auto betas = curves.of_kind(CurveKind::Beta);
  const int expected_betas = orientable ? 0 : (surface.euler % 2 == 0 ? 2 : 1);
  if (static_cast<int>(betas.size()) != expected_betas ||
      static_cast<int>(alphas.size()) + static_cast<int>(betas.size()) != surface.b1)
    throw Error(ErrorKind::CurveNotRealizable, "curve data does not match the surface");
  auto labels = labels_for(map, curves.omega, options);
  auto matching = options.reference ? options.reference : find_matching(map);
  if (!matching) {
    set_zero(result);
    return result;
  }
  auto k = normalize_enhancement(map, labels, seed_orientation(map, labels, options), curves, *matching);
  if (options.backend == Backend::Exact) practical_sum<GaussRational>(map, curves, k, options, result);
  else practical_sum<Complex>(map, curves, k, options, result);
  return result;
}

}  // namespace

PartitionResult partition_orientable_practical(const CombinatorialMap& map, const PartitionOptions& options) {
  return practical(map, options, true);
}

PartitionResult partition_nonorientable_practical(const CombinatorialMap& map, const PartitionOptions& options) {
  return practical(map, options, false);
}

PartitionResult partition_practical(const CombinatorialMap& map, const PartitionOptions& options) {
  return practical(map, options, is_orientable(map));
}

PartitionResult partition_spin(const CombinatorialMap& map, const PartitionOptions& options) {
  return pin_like(map, options, true);
}

PartitionResult partition_pin(const CombinatorialMap& map, const PartitionOptions& options) {
  return pin_like(map, options, false);
}

PartitionResult partition_oracle(const CombinatorialMap& map, const PartitionOptions& options) {
  auto result = base_result(map, Method::Oracle, options);
  Rational z = partition_bruteforce(map, options.oracle_vertex_limit);
  if (options.backend == Backend::Exact) result.exact = z;
  result.value = z.get_d();
  return result;
}

PartitionResult compute_partition(const CombinatorialMap& map, Method method, const PartitionOptions& options) {
  switch (method) {
    case Method::Practical: return partition_practical(map, options);
    case Method::Pin: return partition_pin(map, options);
    case Method::Spin: return partition_spin(map, options);
    case Method::Oracle: return partition_oracle(map, options);
    case Method::Auto: break;
  }
  try {
    auto r = partition_practical(map, options);
    r.method = Method::Practical;
    return r;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::CurveNotRealizable) throw;
  }
  return partition_pin(map, options);
}

}  // namespace pfdimers
