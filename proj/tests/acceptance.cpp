// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "pfdimers/errors.hpp"
#include "pfdimers/generators.hpp"
#include "pfdimers/homology.hpp"
#include "pfdimers/kasteleyn.hpp"
#include "pfdimers/oracle.hpp"
#include "pfdimers/partition.hpp"
#include "pfdimers/pfaffian.hpp"
#include "pfdimers/spin_quadratic.hpp"
#include "support.hpp"

using namespace pfdimers;
using testing_support::TestInstance;

namespace {

// Pinned tolerances and limits.
constexpr double kFloatRelativeTolerance = 1e-9;
constexpr double kKleinSeconds = 5.0;
constexpr double kTorusSeconds = 5.0;
constexpr double kPlanarSeconds = 1.0;
constexpr double kOracleSweepSeconds = 60.0;
constexpr int kOracleSweepInstances = 120;
constexpr int kRandomOrientations = 1000;
constexpr int kInvarianceInstances = 12;
constexpr int kExpansionLimit = 12;
constexpr int kLargestFloatCheck = 30;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool close(double approx, double exact) {
  return std::abs(approx - exact) <= kFloatRelativeTolerance * std::max(1.0, std::abs(exact));
}

Rational exact_z(const CombinatorialMap& map, Method method, const PartitionOptions& options = {}) {
  auto result = compute_partition(map, method, options);
  if (!result.exact) throw Error(ErrorKind::NonRealResult, "no exact value");
  return *result.exact;
}

Outcome named_lattice(LatticeSurface surface, const Rational& expected, const std::vector<Method>& methods,
                      double limit) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  auto inst = lattice(surface, 5, 6);
  PartitionOptions options;
  options.curves = inst.curves;
  for (auto method : methods) {
    auto value = exact_z(inst.map, method, options);
    if (value != expected)
      out.fail(std::string(method_name(method)) + " gave " + value.get_str() + ", expected " + expected.get_str());
  }
  double elapsed = seconds_since(start);
  if (elapsed >= limit) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass) out.detail = "Z=" + expected.get_str() + " in " + std::to_string(elapsed) + " s";
  return out;
}

std::vector<TestInstance> sweep_instances(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<TestInstance> out;
  for (int i = 0; i < count; ++i)
    out.push_back(i % 4 == 3 ? testing_support::random_embedding(rng, 12) : testing_support::random_lattice(rng, 16));
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  int comparisons = 0;
  for (const auto& t : sweep_instances(101, kOracleSweepInstances)) {
    auto expected = partition_bruteforce(t.map);
    bool orientable = classify(t.map).orientable();
    // Practical formula with the generator's curves and with derived ones.
    std::vector<std::pair<Method, std::optional<CurveSet>>> runs{{Method::Pin, std::nullopt}};
    if (orientable) runs.push_back({Method::Spin, std::nullopt});
    for (const auto& curves : {t.curves, std::optional<CurveSet>{}}) {
      try {
        PartitionOptions probe;
        probe.curves = curves;
        partition_practical(t.map, probe);
        runs.push_back({Method::Practical, curves});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::CurveNotRealizable) throw;
      }
    }
    for (const auto& [method, curves] : runs) {
      for (auto backend : {Backend::Exact, Backend::Float}) {
        PartitionOptions options;
        options.curves = curves;
        options.backend = backend;
        auto result = compute_partition(t.map, method, options);
        bool ok = backend == Backend::Exact ? result.exact == expected : close(result.value, expected.get_d());
        if (!ok)
          out.fail(t.label + " " + std::string(method_name(method)) + "/" + std::string(backend_name(backend)) +
                   " gave " + result.value_string() + ", oracle " + expected.get_str());
        ++comparisons;
      }
    }
  }
  double elapsed = seconds_since(start);
  if (elapsed >= kOracleSweepSeconds) out.fail("took " + std::to_string(elapsed) + " s");
  if (out.pass)
    out.detail = std::to_string(kOracleSweepInstances) + " instances, " + std::to_string(comparisons) +
                 " comparisons in " + std::to_string(elapsed) + " s";
  return out;
}

Outcome orientation_counting() {
  Outcome out;
  int maps = 0;
  for (const auto& t : testing_support::small_orientable_maps()) {
    auto type = classify(t.map);
    auto count = count_all_kasteleyn(t.map, vertex_labels(t.map, Bits(t.map.edge_count(), 0)));
    std::uint64_t expected = std::uint64_t{1} << (2 * type.genus + t.map.vertex_count() - 1);
    if (count.orientations != expected)
      out.fail(t.label + ": " + std::to_string(count.orientations) + " orientations, expected " +
               std::to_string(expected));
    if (count.classes != (std::uint64_t{1} << type.b1)) out.fail(t.label + ": wrong class count");
    ++maps;
  }
  std::vector<TestInstance> non_orientable{
      {"projective two-edge", testing_support::projective_two_edge(), std::nullopt},
      {"rp2 2x2", lattice(LatticeSurface::ProjectivePlane, 2, 2).map, std::nullopt},
      {"klein 2x2", lattice(LatticeSurface::KleinHexagon, 2, 2).map, std::nullopt}};
  for (const auto& t : non_orientable) {
    auto type = classify(t.map);
    auto count = count_all_kasteleyn(t.map, vertex_labels(t.map, t.map.twists()));
    if (count.classes != (std::uint64_t{1} << type.b1)) out.fail(t.label + ": wrong class count");
    if (count.orientations == 0) out.fail(t.label + ": no Kasteleyn orientation");
  }
  for (auto surface : {LatticeSurface::Planar, LatticeSurface::ProjectivePlane}) {
    auto odd = lattice(surface, 3, 3).map;
    auto labels = vertex_labels(odd, odd.twists());
    if (count_all_kasteleyn(odd, labels).orientations != 0) out.fail("odd vertex count has orientations");
    try {
      construct_kasteleyn(odd, labels);
      out.fail("construction succeeded on odd vertex count");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OddVertexCount) out.fail("wrong error on odd vertex count");
    }
  }
  if (out.pass) out.detail = std::to_string(maps) + " orientable and 3 non-orientable maps";
  return out;
}

Outcome curvature_parity() {
  Outcome out;
  std::mt19937_64 rng(606);
  int violations = 0;
  for (int done = 0; done < kRandomOrientations;) {
    int v = std::uniform_int_distribution<int>(1, 10)(rng);
    auto map = random_map(rng, v, std::uniform_int_distribution<int>(0, 5)(rng), 0.3, true);
    auto labels = vertex_labels(map, map.twists());
    auto faces = trace_faces(map);
    for (int j = 0; j < 10; ++j, ++done) {
      Orientation k(map.edge_count());
      for (auto& bit : k) bit = std::uniform_int_distribution<int>(0, 1)(rng);
      if (curvature_report(map, faces, labels, k).total_parity() != map.vertex_count() % 2) ++violations;
    }
  }
  if (violations) out.fail(std::to_string(violations) + " violations");
  else out.detail = std::to_string(kRandomOrientations) + " orientations, 0 violations";
  return out;
}

struct FormCase {
  std::string label;
  CombinatorialMap map;
  Cochain1 omega;
  Labelling labels;
  HomologyBasis basis;
  Orientation k;
  Matching reference;
};

std::vector<FormCase> form_cases() {
  std::vector<FormCase> out;
  auto add = [&](const std::string& label, const CombinatorialMap& map) {
    auto d = find_matching(map);
    if (!d) return;
    Cochain1 omega = map.twists();
    auto labels = vertex_labels(map, omega);
    auto basis = cycle_basis(map, labels);
    auto k = construct_kasteleyn(map, labels);
    out.push_back({label, map, omega, labels, basis, k, *d});
  };
  for (auto surface : {LatticeSurface::Planar, LatticeSurface::Torus, LatticeSurface::ProjectivePlane,
                       LatticeSurface::KleinHexagon})
    for (auto [r, c] : std::vector<std::pair<int, int>>{{2, 2}, {3, 4}, {4, 4}})
      add(std::string(lattice_surface_name(surface)), lattice(surface, r, c).map);
  for (const auto& t : sweep_instances(707, 60)) add(t.label, t.map);
  return out;
}

Outcome enhancement_law(const std::vector<FormCase>& cases) {
  Outcome out;
  long checks = 0;
  for (const auto& c : cases) {
    bool orientable = classify(c.map).orientable();
    for (const auto& k : enumerate_classes(c.k, c.basis)) {
      auto q = quadratic_form(c.map, c.omega, c.labels, k, c.reference, c.basis);
      int n = q.rank();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Bits x(n, 0), y(n, 0);
          x[i] ^= 1;
          y[j] ^= 1;
          Bits sum = x;
          xor_into(sum, y);
          int expected = (q(x) + q(y) + 2 * c.basis.intersection(x, y)) % 4;
          if (q(sum) != expected) out.fail(c.label + ": law fails on a basis pair");
          if (orientable && q(x) % 2) out.fail(c.label + ": odd value on an orientable surface");
          ++checks;
        }
      // The law extends the basis values; direct evaluation on other simple
      // cycles must agree with the extension.
      for (const auto& walk : enumerate_simple_cycles(c.map, 60)) {
        int direct = quad_enhancement(c.map, c.omega, c.labels, k, c.reference, walk);
        if (direct != q(c.basis.coordinates(walk))) out.fail(c.label + ": cycle value disagrees with the law");
        if (orientable && direct % 2) out.fail(c.label + ": odd value on an orientable surface");
        ++checks;
      }
    }
  }
  if (out.pass) out.detail = std::to_string(cases.size()) + " maps, " + std::to_string(checks) + " checks";
  return out;
}

Outcome structural_invariance() {
  Outcome out;
  std::mt19937_64 rng(808);
  int relabelled = 0, moved = 0, cocycle = 0, reference = 0;
  while (reference < kInvarianceInstances) {
    auto t = testing_support::random_lattice(rng, 16);
    if (t.map.vertex_count() % 2) continue;
    auto expected = partition_bruteforce(t.map);
    int v_count = t.map.vertex_count();

    std::vector<int> perm(v_count);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto relabel = relabel_vertices(t.map, perm);
    if (exact_z(relabel, Method::Auto) != expected || exact_z(relabel, Method::Pin) != expected)
      out.fail(t.label + ": relabelling changed Z");
    ++relabelled;

    Cochain1 omega = t.map.twists();
    auto labels = vertex_labels(t.map, omega);
    auto k = construct_kasteleyn(t.map, labels);
    Orientation shaken = k;
    for (int v = 0; v < v_count; ++v)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) shaken = flip(shaken, vertex_coboundary(t.map, v));
    PartitionOptions by_move;
    by_move.seed = shaken;
    if (exact_z(t.map, Method::Pin, by_move) != expected) out.fail(t.label + ": equivalence moves changed Z");
    ++moved;

    int v = std::uniform_int_distribution<int>(0, v_count - 1)(rng);
    auto change = omega_change(t.map, omega, labels, k, v);
    PartitionOptions by_cocycle;
    by_cocycle.omega = change.omega;
    by_cocycle.seed = change.orientation;
    if (exact_z(t.map, Method::Pin, by_cocycle) != expected) out.fail(t.label + ": omega + dv changed Z");
    ++cocycle;

    std::vector<Matching> all;
    enumerate_matchings(t.map, [&](const Matching& m) { all.push_back(m); });
    if (all.empty()) continue;
    PartitionOptions by_reference;
    by_reference.reference = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    if (exact_z(t.map, Method::Pin, by_reference) != expected) out.fail(t.label + ": new D0 changed Z");
    if (classify(t.map).orientable() && exact_z(t.map, Method::Spin, by_reference) != expected)
      out.fail(t.label + ": new D0 changed spin Z");
    ++reference;
  }
  if (out.pass)
    out.detail = "relabel " + std::to_string(relabelled) + ", moves " + std::to_string(moved) + ", cocycle " +
                 std::to_string(cocycle) + ", reference " + std::to_string(reference) + " instances";
  return out;
}

FloatMatrix to_float(const ExactMatrix& a) {
  FloatMatrix f(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) f(i, j) = ScalarTraits<GaussRational>::to_complex(a(i, j));
  return f;
}

Outcome pfaffian_backends(const std::vector<FormCase>& cases) {
  Outcome out;
  std::mt19937_64 rng(909);
  std::vector<ExactMatrix> small, large;
  for (const auto& c : cases)
    for (const auto& k : enumerate_classes(c.k, c.basis)) {
      auto a = build_adjacency<GaussRational>(c.map, c.omega, k);
      (a.rows() <= kExpansionLimit ? small : large).push_back(a);
    }
  for (int n = 2; n <= kExpansionLimit; n += 2)
    for (int j = 0; j < 4; ++j) small.push_back(testing_support::random_skew(rng, n, 4, j % 2 == 1));
  for (int n = 14; n <= kLargestFloatCheck; n += 4) large.push_back(testing_support::random_skew(rng, n, 5, true));
  for (auto surface : {LatticeSurface::Torus, LatticeSurface::KleinHexagon}) {
    auto inst = lattice(surface, 5, 6);
    auto labels = vertex_labels(inst.map, inst.omega);
    large.push_back(build_adjacency<GaussRational>(inst.map, inst.omega, construct_kasteleyn(inst.map, labels)));
  }
  auto float_check = [&](const ExactMatrix& a) {
    auto exact = ScalarTraits<GaussRational>::to_complex(pfaffian<GaussRational>(a));
    auto approx = pfaffian<Complex>(to_float(a));
    if (std::abs(approx - exact) > kFloatRelativeTolerance * std::max(1.0, std::abs(exact)))
      out.fail("float/exact disagreement at size " + std::to_string(a.rows()));
  };
  for (const auto& a : small) {
    auto pf = pfaffian<GaussRational>(a);
    if (pf * pf != determinant<GaussRational>(a)) out.fail("Pf^2 != det at size " + std::to_string(a.rows()));
    if (pf != pfaffian_expansion<GaussRational>(a, kExpansionLimit))
      out.fail("elimination != expansion at size " + std::to_string(a.rows()));
    float_check(a);
  }
  for (const auto& a : large) float_check(a);
  if (out.pass)
    out.detail = std::to_string(small.size()) + " matrices <= 12, " + std::to_string(large.size()) + " up to 30";
  return out;
}

Outcome brown_arf(const std::vector<FormCase>& cases) {
  Outcome out;
  long forms = 0, comparisons = 0;
  for (const auto& c : cases) {
    std::vector<HomologyBasis> bases{c.basis};
    for (int root : {c.map.vertex_count() / 2, c.map.vertex_count() - 1}) bases.push_back(cycle_basis(c.map, c.labels, root));
    for (const auto& k : enumerate_classes(c.k, c.basis)) {
      std::vector<int> values;
      for (const auto& basis : bases) {
        auto q = quadratic_form(c.map, c.omega, c.labels, k, c.reference, basis);
        auto g = gauss_sum(q);
        if (g.re * g.re + g.im * g.im != (std::int64_t{1} << basis.rank()))
          out.fail(c.label + ": Gauss sum has the wrong modulus");
        values.push_back(brown(q));
        ++forms;
      }
      for (int value : values) {
        if (value != values.front()) out.fail(c.label + ": Brown invariant depends on the basis");
        ++comparisons;
      }
    }
  }
  if (out.pass) out.detail = std::to_string(forms) + " forms, " + std::to_string(comparisons) + " basis comparisons";
  return out;
}

}  // namespace

int main() {
  std::vector<FormCase> cases;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 Klein bottle 5x6 Z=20072",
       [] { return named_lattice(LatticeSurface::KleinHexagon, 20072, {Method::Practical, Method::Pin}, kKleinSeconds); }},
      {"2 torus 5x6 Z=9922",
       [] { return named_lattice(LatticeSurface::Torus, 9922, {Method::Practical, Method::Spin}, kTorusSeconds); }},
      {"3 planar 5x6 Z=1183",
       [] { return named_lattice(LatticeSurface::Planar, 1183, {Method::Practical}, kPlanarSeconds); }},
      {"4 oracle agreement", oracle_agreement},
      {"5 orientation counting", orientation_counting},
      {"6 curvature parity", curvature_parity},
      {"7 enhancement law", [&] { return enhancement_law(cases); }},
      {"8 structural invariance", structural_invariance},
      {"9 Pfaffian backends", [&] { return pfaffian_backends(cases); }},
      {"10 Brown/Arf sanity", [&] { return brown_arf(cases); }},
  };
  cases = form_cases();
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %s: %s\n", result.pass ? "PASS" : "FAIL", name.c_str(), result.detail.c_str());
    std::fflush(stdout);
    if (!result.pass) ++failures;
  }
  return failures ? 1 : 0;
}
