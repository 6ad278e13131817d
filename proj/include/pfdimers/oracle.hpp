#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pfdimers/homology.hpp"
#include "pfdimers/rational.hpp"
#include "pfdimers/spin_quadratic.hpp"

namespace pfdimers {

inline constexpr int kOracleVertexLimit = 36;

// Calls visit for every perfect matching. Throws TooLarge above the limit.
void enumerate_matchings(const CombinatorialMap& map, const std::function<void(const Matching&)>& visit,
                         int max_vertices = kOracleVertexLimit);

Rational partition_bruteforce(const CombinatorialMap& map, int max_vertices = kOracleVertexLimit);
std::uint64_t count_matchings(const CombinatorialMap& map, int max_vertices = kOracleVertexLimit);

// Any perfect matching, by augmenting search over the same branching.
std::optional<Matching> find_matching(const CombinatorialMap& map);

Rational matching_weight(const CombinatorialMap& map, const Matching& matching);

// Z split by the homology class of D + D0, indexed by the bit mask of
// coordinates in the basis.
std::vector<Rational> homology_buckets(const CombinatorialMap& map, const Matching& reference,
                                       const HomologyBasis& basis, int max_vertices = kOracleVertexLimit);

}  // namespace pfdimers
