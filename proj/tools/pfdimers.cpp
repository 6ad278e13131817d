#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pfdimers/errors.hpp"
#include "pfdimers/generators.hpp"
#include "pfdimers/graph_io.hpp"
#include "pfdimers/kasteleyn.hpp"
#include "pfdimers/oracle.hpp"
#include "pfdimers/partition.hpp"
#include "pfdimers/spin_quadratic.hpp"

using namespace pfdimers;

namespace {

constexpr int kUsageError = 1;
constexpr int kComputeError = 2;

// Errors found while reading the input; reported with exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GraphFile load(const std::string& path) {
  try {
    if (path.empty() || path == "-") return parse_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_graph(in);
  } catch (const Error& err) {
    throw InputError(err.what());
  }
}

std::string slug(std::string s) {
  for (auto& c : s)
    if (c == ' ') c = '_';
  return s;
}

// Text and key-value output share one writer: text prints "key value",
// kv prints "key=value".
class Report {
 public:
  explicit Report(bool kv) : kv_(kv) {}
  void put(const std::string& key, const std::string& value) {
    std::cout << key << (kv_ ? "=" : " ") << value << "\n";
  }
  bool kv() const { return kv_; }

 private:
  bool kv_;
};

std::string bits_string(const Bits& b) {
  std::string s;
  for (auto x : b) s += x ? '1' : '0';
  return s.empty() ? "-" : s;
}

int run_gen(const std::string& surface_name, const std::string& size, const std::string& weights,
            std::uint64_t seed, const std::string& out_path) {
  auto surface = parse_lattice_surface(surface_name);
  if (!surface) throw InputError("unknown surface '" + surface_name + "'");
  int rows = 0, cols = 0;
  char x = 0;
  std::istringstream dims(size);
  if (!(dims >> rows >> x >> cols) || (x != 'x' && x != 'X') || !dims.eof())
    throw InputError("size must look like 5x6");
  Instance inst;
  try {
    inst = lattice(*surface, rows, cols);
  } catch (const Error& err) {
    throw InputError(err.what());
  }
  if (weights == "random") {
    std::mt19937_64 rng(seed);
    inst.map = with_weights(inst.map, random_weights(inst.map.edge_count(), rng));
  } else if (weights != "unit") {
    throw InputError("weights must be unit or random");
  }
  GraphFile file{inst.map, inst.omega, inst.curves};
  if (file.curves && file.curves->curves.empty()) file.curves.reset();
  std::string text = "# " + std::string(lattice_surface_name(*surface)) + " " + size + ", word " +
                     std::string(lattice_word(*surface)) + "\n" + serialize_graph(file);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
  }
  return 0;
}

int run_orient(const GraphFile& file, Report& report) {
  const auto& map = file.map;
  Cochain1 omega = file.omega.value_or(map.twists());
  auto labels = vertex_labels(map, omega);
  auto k = construct_kasteleyn(map, labels);
  auto faces = trace_faces(map);
  auto curvature = curvature_report(map, faces, labels, k);
  for (int e = 0; e < map.edge_count(); ++e)
    report.put("edge." + std::to_string(e), std::to_string(tail(map, k, e)) + " " + std::to_string(head(map, k, e)));
  report.put("faces", std::to_string(faces.size()));
  report.put("curved_faces", std::to_string(curvature.curved_faces));
  return 0;
}

int run_invariants(const GraphFile& file, Report& report) {
  const auto& map = file.map;
  auto surface = classify(map);
  report.put("surface", slug(surface.name()));
  report.put("b1", std::to_string(surface.b1));
  report.put("euler", std::to_string(surface.euler));
  Cochain1 omega = file.omega.value_or(map.twists());
  auto labels = vertex_labels(map, omega);
  if (map.vertex_count() % 2 != 0) {
    report.put("kasteleyn", "none");
    return 0;
  }
  auto reference = find_matching(map);
  if (!reference) {
    report.put("matching", "none");
    return 0;
  }
  auto basis = cycle_basis(map, labels);
  auto k = construct_kasteleyn(map, labels);
  auto classes = enumerate_classes(k, basis);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto q = basis_normalized(quadratic_form(map, omega, labels, classes[i], *reference, basis), *reference, basis);
    std::string label = "class.";
    for (int b = 0; b < basis.rank(); ++b) label += mask_bit(i, b) ? '1' : '0';
    if (basis.rank() == 0) label += "-";
    std::string table;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << q.rank()); ++x) table += (x ? " " : "") + std::to_string(q(x));
    report.put(label + ".q", table);
    report.put(label + ".brown", std::to_string(brown(q)));
    if (surface.orientable()) report.put(label + ".arf", std::to_string(arf(q)));
  }
  return 0;
}

int run_partition(const GraphFile& file, Method method, Backend backend, int threads, Report& report) {
  PartitionOptions options;
  options.backend = backend;
  options.threads = threads;
  options.curves = file.curves;
  if (method == Method::Pin) options.omega = file.omega;
  auto result = compute_partition(file.map, method, options);
  if (result.ill_conditioned) std::cerr << "warning: ill-conditioned Pfaffian pivot; consider --backend exact\n";
  if (!report.kv()) {
    std::cout << result.value_string() << "\n";
    return 0;
  }
  report.put("Z", result.value_string());
  report.put("method", std::string(method_name(result.method)));
  report.put("backend", std::string(backend_name(result.backend)));
  report.put("b1", std::to_string(result.b1));
  report.put("surface", slug(result.surface));
  for (const auto& term : result.terms) report.put("pf." + term.label, term.pfaffian);
  return 0;
}

int run_oracle(const GraphFile& file, int max_vertices, Report& report) {
  auto z = partition_bruteforce(file.map, max_vertices);
  if (!report.kv()) {
    std::cout << to_string(z) << "\n";
    return 0;
  }
  report.put("Z", to_string(z));
  report.put("method", "oracle");
  report.put("matchings", std::to_string(count_matchings(file.map, max_vertices)));
  return 0;
}

int run_verify(const GraphFile& file, int threads, int max_vertices, Report& report) {
  const auto& map = file.map;
  std::optional<Rational> reference;
  if (map.vertex_count() <= max_vertices) {
    reference = partition_bruteforce(map, max_vertices);
    report.put("oracle", to_string(*reference));
  }
  bool all_ok = true;
  for (Method method : {Method::Practical, Method::Pin, Method::Spin}) {
    for (Backend backend : {Backend::Exact, Backend::Float}) {
      std::string key = std::string(method_name(method)) + "." + std::string(backend_name(backend));
      PartitionOptions options;
      options.backend = backend;
      options.threads = threads;
      options.curves = file.curves;
      try {
        auto r = compute_partition(map, method, options);
        if (!reference && backend == Backend::Exact) reference = r.exact;
        bool ok = true;
        if (reference) {
          double want = reference->get_d();
          ok = r.exact ? *r.exact == *reference : std::abs(r.value - want) <= 1e-9 * std::max(1.0, std::abs(want));
        }
        all_ok &= ok;
        report.put(key, r.value_string() + (ok ? " ok" : " MISMATCH"));
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::WrongSurfaceType || err.kind() == ErrorKind::CurveNotRealizable) {
          report.put(key, "skipped " + std::string(error_name(err.kind())));
        } else {
          all_ok = false;
          report.put(key, std::string("error ") + err.what());
        }
      }
    }
  }
  report.put("verdict", all_ok ? "pass" : "fail");
  return all_ok ? 0 : kComputeError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimer partition functions on surface graphs via Pfaffians"};
  app.require_subcommand(1);

  std::string format = "text";
  int threads = 0;
  if (const char* env = std::getenv("PFDIMERS_THREADS")) threads = std::atoi(env);

  auto add_common = [&](CLI::App* sub, std::string& input) {
    sub->add_option("input", input, "graph file, '-' or nothing for standard input");
    sub->add_option("--format", format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
  };

  std::string surface, size, weights = "unit", out_path;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "generate a lattice on a surface");
  gen->add_option("--surface", surface, "planar, torus, rp2 or klein_hexagon")->required();
  gen->add_option("--size", size, "rows x columns, e.g. 5x6")->required();
  gen->add_option("--weights", weights, "unit or random");
  gen->add_option("--seed", seed, "seed for random weights");
  gen->add_option("--out", out_path, "output file (default standard output)");

  std::string input;
  auto* orient = app.add_subcommand("orient", "construct a Kasteleyn orientation");
  add_common(orient, input);
  auto* invariants = app.add_subcommand("invariants", "quadratic forms and Brown/Arf invariants per class");
  add_common(invariants, input);

  std::string method_text = "auto", backend_text = "exact";
  auto* partition = app.add_subcommand("partition", "compute the partition function");
  add_common(partition, input);
  partition->add_option("--method", method_text, "auto, practical, pin, spin or oracle")
      ->check(CLI::IsMember({"auto", "practical", "pin", "spin", "oracle"}));
  partition->add_option("--backend", backend_text, "float or exact")->check(CLI::IsMember({"float", "exact"}));
  partition->add_option("--threads", threads, "worker threads (0: automatic)");

  int max_vertices = kOracleVertexLimit;
  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration of dimer configurations");
  add_common(oracle, input);
  oracle->add_option("--max-vertices", max_vertices, "refuse larger graphs");

  auto* verify = app.add_subcommand("verify", "cross-check every applicable method");
  add_common(verify, input);
  verify->add_option("--threads", threads, "worker threads (0: automatic)");
  verify->add_option("--max-vertices", max_vertices, "oracle size limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : kUsageError;
  }
  set_default_threads(threads);
  Report report(format == "kv");

  try {
    if (*gen) return run_gen(surface, size, weights, seed, out_path);
    GraphFile file = load(input);
    if (*orient) return run_orient(file, report);
    if (*invariants) return run_invariants(file, report);
    if (*partition) return run_partition(file, *parse_method(method_text), *parse_backend(backend_text), threads, report);
    if (*oracle) return run_oracle(file, max_vertices, report);
    if (*verify) return run_verify(file, threads, max_vertices, report);
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsageError;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kComputeError;
  }
  return kUsageError;
}
