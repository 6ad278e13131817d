#pragma once

#include <span>
#include <string>
#include <vector>

#include "pfdimers/rational.hpp"
#include "pfdimers/z2.hpp"

namespace pfdimers {

// Half-edge h = 2e + s. Side 0 sits at ends(e).u, side 1 at ends(e).v.
struct EdgeEnds {
  int u = 0;
  int v = 0;
};

struct EdgeSpec {
  int u = 0;
  int v = 0;
  bool twisted = false;
  Rational weight = 1;
};

// Signed rotation system: a cyclic (chart-counterclockwise) order of
// half-edges at each vertex plus a twist bit per edge.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  int vertex_count() const noexcept { return static_cast<int>(rotations_.size()); }
  int edge_count() const noexcept { return static_cast<int>(ends_.size()); }
  int half_edge_count() const noexcept { return 2 * edge_count(); }

  static constexpr int edge_of(int h) noexcept { return h >> 1; }
  static constexpr int side_of(int h) noexcept { return h & 1; }
  static constexpr int twin(int h) noexcept { return h ^ 1; }
  static constexpr int half_edge(int e, int side) noexcept { return 2 * e + side; }

  int anchor(int h) const { return side_of(h) ? ends_[edge_of(h)].v : ends_[edge_of(h)].u; }
  const EdgeEnds& ends(int e) const { return ends_[e]; }
  bool is_loop(int e) const { return ends_[e].u == ends_[e].v; }
  bool twisted(int e) const { return twists_[e] != 0; }
  const Bits& twists() const noexcept { return twists_; }
  const Rational& weight(int e) const { return weights_[e]; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  std::span<const int> rotation(int v) const { return rotations_[v]; }
  int degree(int v) const { return static_cast<int>(rotations_[v].size()); }

  // Next / previous half-edge counterclockwise around the anchor.
  int succ(int h) const;
  int pred(int h) const;

  friend CombinatorialMap build_map(int vertex_count, const std::vector<EdgeSpec>& edges,
                                    const std::vector<std::vector<int>>& rotations);

 private:
  std::vector<std::vector<int>> rotations_;
  std::vector<EdgeEnds> ends_;
  Bits twists_;
  std::vector<Rational> weights_;
  std::vector<int> position_;
};

// Validates and builds. Rotations list half-edge ids, each exactly once,
// at the vertex the half-edge is anchored to.
CombinatorialMap build_map(int vertex_count, const std::vector<EdgeSpec>& edges,
                           const std::vector<std::vector<int>>& rotations);

std::vector<EdgeSpec> edge_specs(const CombinatorialMap& map);

// Same embedding with every vertex v renamed to perm[v].
CombinatorialMap relabel_vertices(const CombinatorialMap& map, const std::vector<int>& perm);
CombinatorialMap with_weights(const CombinatorialMap& map, const std::vector<Rational>& weights);
// Reverses the rotation at v and flips the twist of every non-loop edge at v.
// The surface is unchanged; this is a local orientation switch.
CombinatorialMap switch_local_orientation(const CombinatorialMap& map, int v);

// A step of a face boundary: departing half-edge and the sheet of the
// orientation double cover we are on at the departing vertex.
struct FaceStep {
  int half_edge = 0;
  int sheet = 0;
};

using Face = std::vector<FaceStep>;

struct FaceSet {
  std::vector<Face> faces;
  int size() const { return static_cast<int>(faces.size()); }
};

// One boundary walk per face, traversed with the face on the left of the
// lift (counterclockwise in the chart of the sheet).
FaceSet trace_faces(const CombinatorialMap& map);

enum class SurfaceKind { Orientable, NonOrientable };

struct SurfaceType {
  SurfaceKind kind = SurfaceKind::Orientable;
  int euler = 2;
  int b1 = 0;
  // Orientable genus, or the number of cross-caps for non-orientable surfaces.
  int genus = 0;

  bool orientable() const { return kind == SurfaceKind::Orientable; }
  std::string name() const;
};

int euler_characteristic(const CombinatorialMap& map, const FaceSet& faces);
SurfaceType classify(const CombinatorialMap& map);
SurfaceType classify(const CombinatorialMap& map, const FaceSet& faces);
bool is_orientable(const CombinatorialMap& map);

// The twist bits, as a 1-cochain representing w1.
Bits stiefel_whitney_cocycle(const CombinatorialMap& map);

// Labels of the orientation double cover. The sheet-s lift of v is labelled
// "-" iff s xor minus_on_sheet0[v]. `reversed` records that the cover was
// given the opposite orientation, which is what a global swap of labels does.
struct Labelling {
  Bits minus_on_sheet0;
  bool reversed = false;

  bool minus(int v, int sheet) const { return ((minus_on_sheet0[v] ^ sheet) & 1) != 0; }
  Labelling swapped() const;
  Labelling flipped_at(int v) const;
};

// Labels compatible with omega: the label flips across e iff omega(e) differs
// from the twist of e. Throws InvalidCocycle when omega is not cohomologous
// to the twist cochain.
Labelling vertex_labels(const CombinatorialMap& map, const Bits& omega, int root = 0);

// A closed walk given by its departing half-edges.
struct ClosedWalk {
  std::vector<int> steps;

  int length() const { return static_cast<int>(steps.size()); }
};

// Throws NotAClosedWalk unless consecutive steps connect and the walk closes.
void check_closed(const CombinatorialMap& map, const ClosedWalk& walk);
bool is_vertex_simple(const CombinatorialMap& map, const ClosedWalk& walk);
void check_simple(const CombinatorialMap& map, const ClosedWalk& walk);
std::vector<int> walk_vertices(const CombinatorialMap& map, const ClosedWalk& walk);
// Edge parities of the walk.
Bits walk_chain(const CombinatorialMap& map, const ClosedWalk& walk);
int walk_twist(const CombinatorialMap& map, const ClosedWalk& walk);
ClosedWalk reversed(const ClosedWalk& walk);
// Builds a walk from a vertex sequence x0 x1 ... x_{L-1} (closing to x0) using
// explicit edges between consecutive vertices.
ClosedWalk walk_from_edges(const CombinatorialMap& map, int start, const std::vector<int>& edges);

}  // namespace pfdimers
