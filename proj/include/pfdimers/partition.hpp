#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfdimers/homology.hpp"
#include "pfdimers/kasteleyn.hpp"
#include "pfdimers/rational.hpp"
#include "pfdimers/spin_quadratic.hpp"

namespace pfdimers {

enum class Method { Auto, Practical, Pin, Spin, Oracle };
enum class Backend { Float, Exact };

std::optional<Method> parse_method(std::string_view name);
std::string_view method_name(Method method);
std::optional<Backend> parse_backend(std::string_view name);
std::string_view backend_name(Backend backend);

// One Pfaffian of a sum, for diagnostics.
struct ClassTerm {
  std::string label;        // bits of the class index, first basis element first
  std::string coefficient;  // the weight the Pfaffian enters the sum with
  std::string pfaffian;
};

struct PartitionResult {
  Method method = Method::Auto;
  Backend backend = Backend::Exact;
  std::optional<Rational> exact;
  double value = 0.0;
  int b1 = 0;
  std::string surface;
  std::vector<ClassTerm> terms;
  bool ill_conditioned = false;

  std::string value_string() const;
};

struct PartitionOptions {
  Backend backend = Backend::Exact;
  // 0 means the process default (see set_default_threads).
  int threads = 0;
  std::optional<CurveSet> curves;
  // Reference dimer configuration for the pin and spin formulas.
  std::optional<Matching> reference;
  // Representative of w1 for the pin formula; defaults to the twists.
  std::optional<Cochain1> omega;
  // Starting Kasteleyn orientation; constructed when absent.
  std::optional<Orientation> seed;
  // Swap the labelling before use (the formulas must not care).
  bool swap_labels = false;
  int oracle_vertex_limit = 36;
};

void set_default_threads(int threads);
int default_threads();

// Kasteleyn orientation with an odd number of backward steps along every
// companion cycle, obtained by flipping along the curves' crossings.
Orientation normalize_orientation(const CombinatorialMap& map, const Orientation& k, const CurveSet& curves);

// Kasteleyn orientation whose enhancement, normalized by the dimers crossing
// each curve, is 0 on every alpha companion and 3 on every beta companion.
// This is what the practical formulas need; for companions hugging their
// curve it agrees with the odd-parity condition above.
Orientation normalize_enhancement(const CombinatorialMap& map, const Labelling& labels, const Orientation& k,
                                  const CurveSet& curves, const Matching& matching);

PartitionResult partition_orientable_practical(const CombinatorialMap& map, const PartitionOptions& options = {});
PartitionResult partition_nonorientable_practical(const CombinatorialMap& map, const PartitionOptions& options = {});
PartitionResult partition_practical(const CombinatorialMap& map, const PartitionOptions& options = {});
PartitionResult partition_spin(const CombinatorialMap& map, const PartitionOptions& options = {});
PartitionResult partition_pin(const CombinatorialMap& map, const PartitionOptions& options = {});
PartitionResult partition_oracle(const CombinatorialMap& map, const PartitionOptions& options = {});

// Auto picks the practical formula and falls back to the pin formula when
// no curve data can be found.
PartitionResult compute_partition(const CombinatorialMap& map, Method method, const PartitionOptions& options = {});

}  // namespace pfdimers
