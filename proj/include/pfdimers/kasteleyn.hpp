#pragma once

#include <cstdint>
#include <vector>

#include "pfdimers/homology.hpp"
#include "pfdimers/surface_graph.hpp"

namespace pfdimers {

// One bit per edge: 0 orients e from ends(e).u to ends(e).v, 1 the reverse.
using Orientation = Bits;

// u -> v for u < v; loops get 0.
Orientation canonical_orientation(const CombinatorialMap& map);
int tail(const CombinatorialMap& map, const Orientation& k, int e);
int head(const CombinatorialMap& map, const Orientation& k, int e);

// Kasteleyn curvature of one face (0 or 1).
int curvature(const CombinatorialMap& map, const Labelling& labels, const Orientation& k, const Face& face);

struct CurvatureReport {
  Bits per_face;
  int curved_faces = 0;
  int total_parity() const { return curved_faces & 1; }
};

CurvatureReport curvature_report(const CombinatorialMap& map, const FaceSet& faces, const Labelling& labels,
                                 const Orientation& k);
bool is_kasteleyn(const CombinatorialMap& map, const FaceSet& faces, const Labelling& labels, const Orientation& k);

// Throws OddVertexCount when no Kasteleyn orientation exists.
Orientation construct_kasteleyn(const CombinatorialMap& map, const Labelling& labels);

Orientation flip(const Orientation& k, const Cochain1& cochain);
bool equivalent(const CombinatorialMap& map, const Orientation& a, const Orientation& b);
// Representative of the equivalence class that agrees with the canonical
// orientation on a BFS tree.
Orientation class_representative(const CombinatorialMap& map, const Orientation& k);

// One orientation per class, K flipped by sums of the dual cochains. Entry
// with mask m uses the duals whose bit is set in m.
std::vector<Orientation> enumerate_classes(const Orientation& k, const HomologyBasis& basis);

struct KasteleynCount {
  std::uint64_t orientations = 0;
  std::uint64_t classes = 0;
};

// Exhaustive over all 2^E orientations. Throws TooLarge above edge_limit.
KasteleynCount count_all_kasteleyn(const CombinatorialMap& map, const Labelling& labels, int edge_limit = 20);

// Moving the cocycle by the coboundary of v: labels flip at v and K reverses
// the edges at v where omega is 1.
struct OmegaChange {
  Cochain1 omega;
  Labelling labels;
  Orientation orientation;
};

OmegaChange omega_change(const CombinatorialMap& map, const Cochain1& omega, const Labelling& labels,
                         const Orientation& k, int v);

}  // namespace pfdimers
