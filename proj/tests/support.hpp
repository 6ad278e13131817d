#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pfdimers/generators.hpp"
#include "pfdimers/pfaffian.hpp"
#include "pfdimers/rational.hpp"
#include "pfdimers/surface_graph.hpp"

namespace testing_support {

using namespace pfdimers;

// Weighted matching count by memoized recursion over vertex subsets. Shares
// nothing with the library oracle beyond the edge list.
Rational subset_dp_partition(const CombinatorialMap& map);

// Pfaffian as the signed sum over all perfect matchings of the complete
// graph, signs from inversion counts.
GaussRational pfaffian_by_matchings(const ExactMatrix& a);

ExactMatrix random_skew(std::mt19937_64& rng, int n, int range, bool complex_entries);

struct TestInstance {
  std::string label;
  CombinatorialMap map;
  std::optional<CurveSet> curves;
};

// Square lattices on the four surfaces, V <= max_vertices, random weights.
TestInstance random_lattice(std::mt19937_64& rng, int max_vertices = 16);
// Random rotation systems, any surface, even V.
TestInstance random_embedding(std::mt19937_64& rng, int max_vertices = 12);

// A fixed small orientable family used by the counting tests.
std::vector<TestInstance> small_orientable_maps();

// Two vertices, two edges on the projective plane (one twisted).
CombinatorialMap projective_two_edge();
// One vertex with a single loop.
CombinatorialMap single_loop(bool twisted);

}  // namespace testing_support
