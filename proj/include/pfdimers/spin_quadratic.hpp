#pragma once

#include <cstdint>
#include <vector>

#include "pfdimers/homology.hpp"
#include "pfdimers/kasteleyn.hpp"

namespace pfdimers {

// A perfect matching, as a list of edge ids.
using Matching = std::vector<int>;

// Throws NotAMatching unless every vertex is covered exactly once.
void check_matching(const CombinatorialMap& map, const Matching& matching);
// For each vertex, the matched half-edge anchored there.
std::vector<int> matched_half_edges(const CombinatorialMap& map, const Matching& matching);

// Sign of the permutation listing the dimers as (tail, head) pairs, relative
// to the vertex order (identity when empty).
int matching_sign(const CombinatorialMap& map, const Orientation& k, const Matching& matching,
                  const std::vector<int>& vertex_order = {});

// Number of steps of the walk traversed against K.
int count_against(const CombinatorialMap& map, const Orientation& k, const ClosedWalk& walk);

// Number of vertices of the walk whose dimer leaves on the side selected by
// the labelling (the left side where the labels are +).
int count_side_dimers(const CombinatorialMap& map, const Labelling& labels, const Matching& matching,
                      const ClosedWalk& walk);

// Value in Z/4 of the enhancement induced by (K, D) on a simple closed walk.
int quad_enhancement(const CombinatorialMap& map, const Cochain1& omega, const Labelling& labels,
                     const Orientation& k, const Matching& matching, const ClosedWalk& walk);

// A Z/4 quadratic enhancement given by its values on a basis and the
// intersection form.
struct QuadraticForm {
  std::vector<int> basis_values;
  Z2Matrix gram;

  int rank() const { return static_cast<int>(basis_values.size()); }
  int operator()(const Bits& x) const;
  int operator()(std::uint64_t mask) const;
  // q + 2 phi, where phi is given by its values on the basis.
  QuadraticForm shifted(const Bits& phi) const;
  bool operator==(const QuadraticForm&) const = default;
};

QuadraticForm quadratic_form(const CombinatorialMap& map, const Cochain1& omega, const Labelling& labels,
                             const Orientation& k, const Matching& matching, const HomologyBasis& basis);

// The form with the dependence on the dimer configuration removed:
// q_B(C_i) = q_D(C_i) + 2 * (number of dimers crossing the push-off of C_i).
QuadraticForm basis_normalized(const QuadraticForm& q, const Matching& matching, const HomologyBasis& basis);

// Sum of i^q(x) over all classes, exactly.
struct GaussianInteger {
  std::int64_t re = 0;
  std::int64_t im = 0;
  bool operator==(const GaussianInteger&) const = default;
};

GaussianInteger gauss_sum(const QuadraticForm& q);
// Z/8 invariant with gauss_sum = 2^{b1/2} exp(i pi beta / 4). Throws
// DegenerateForm if the modulus is wrong.
int brown(const QuadraticForm& q);
// Z/2 invariant of a form with even values. Throws NotOrientableForm.
int arf(const QuadraticForm& q);

// How the Brown invariant moves when q is translated by 2 x*, where x* is
// the intersection dual of x. Corrected is the sign obtained from the Gauss
// sum; AsPrinted is the opposite sign, kept for comparison.
enum class ShiftSign { Corrected, AsPrinted };
int brown_shift(const QuadraticForm& q, const Bits& x, ShiftSign sign = ShiftSign::Corrected);
// The form x -> q(x) + 2 (x . y).
QuadraticForm translated(const QuadraticForm& q, const Bits& y);

}  // namespace pfdimers
