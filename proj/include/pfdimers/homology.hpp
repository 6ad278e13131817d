#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfdimers/surface_graph.hpp"
#include "pfdimers/z2.hpp"

namespace pfdimers {

using Chain1 = Bits;
using Cochain1 = Bits;

Chain1 face_boundary_chain(const CombinatorialMap& map, const Face& face);
bool is_cycle(const CombinatorialMap& map, const Chain1& chain);
bool is_cocycle(const CombinatorialMap& map, const FaceSet& faces, const Cochain1& cochain);
// A vertex set S with delta(S) = cochain, if one exists.
std::optional<Bits> coboundary_preimage(const CombinatorialMap& map, const Cochain1& cochain);
bool is_coboundary(const CombinatorialMap& map, const Cochain1& cochain);
Cochain1 vertex_coboundary(const CombinatorialMap& map, int v);

// Sum of the cochain over the steps of a walk (with multiplicity), mod 2.
int evaluate(const Cochain1& cochain, const ClosedWalk& walk);

// Edges crossed by a copy of the walk pushed off to its left. start_sheet
// picks which side counts as left at the first vertex; it is carried along
// the walk through twisted edges. For a one-sided walk the copy has to cross
// the walk once, which happens on the closing edge.
Cochain1 pushoff_cochain(const CombinatorialMap& map, const ClosedWalk& walk, int start_sheet = 0);

// Mod 2 intersection number of two closed walks (the second may be any walk).
int intersection_number(const CombinatorialMap& map, const ClosedWalk& a, const ClosedWalk& b);

// Simple cycles whose classes form a basis of H1(Sigma; Z/2), together with
// the intersection form and the cochains dual to the basis.
struct HomologyBasis {
  std::vector<ClosedWalk> cycles;
  std::vector<Cochain1> pushoffs;
  Z2Matrix gram;
  std::vector<Cochain1> duals;

  int rank() const { return static_cast<int>(cycles.size()); }
  // Coordinates of a cycle in this basis.
  Bits coordinates(const Chain1& cycle) const;
  Bits coordinates(const ClosedWalk& walk) const;
  int intersection(const Bits& x, const Bits& y) const;
};

// Fundamental cycles of a BFS tree, filtered against face boundaries.
// Push-offs start on the sheet that is "left" for the given labelling, so on
// orientable maps they are left push-offs in the surface orientation.
HomologyBasis cycle_basis(const CombinatorialMap& map, const Labelling& labels, int root = 0);
// Builds the basis data for given cycles; throws DegenerateForm when they do
// not form a basis.
HomologyBasis basis_from_cycles(const CombinatorialMap& map, const Labelling& labels,
                                std::vector<ClosedWalk> cycles);
HomologyBasis cycle_basis(const CombinatorialMap& map);

// All simple cycles up to a cap, used to probe well-definedness of
// functions on homology. Each cycle is reported once per direction.
std::vector<ClosedWalk> enumerate_simple_cycles(const CombinatorialMap& map, std::size_t cap);

// Curve data for the practical formulas: a transverse curve described by the
// edges it crosses, plus a companion cycle in the graph running along it.
enum class CurveKind { Alpha, Beta };

struct Curve {
  CurveKind kind = CurveKind::Alpha;
  std::string name;
  Cochain1 crossing;
  ClosedWalk companion;
};

struct CurveSet {
  Cochain1 omega;
  std::vector<Curve> curves;

  std::vector<const Curve*> of_kind(CurveKind kind) const;
};

// A curve parallel to a simple cycle of the graph, on its left.
Curve companion_curve(const CombinatorialMap& map, const Labelling& labels, CurveKind kind,
                      std::string name, const ClosedWalk& core);
// Throws CurveNotRealizable when the data does not fit the practical setup.
void check_curves(const CombinatorialMap& map, const CurveSet& curves);
// Curve data from the combinatorics alone: basis cycles for orientable maps,
// disjoint one-sided cycles for the projective plane and the Klein bottle.
// Throws CurveNotRealizable otherwise.
CurveSet derive_curves(const CombinatorialMap& map);

}  // namespace pfdimers
