#include <gtest/gtest.h>

#include "pfdimers/errors.hpp"
#include "pfdimers/generators.hpp"
#include "pfdimers/surface_graph.hpp"
#include "support.hpp"

using namespace pfdimers;
using testing_support::single_loop;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::ParseError;
}

CombinatorialMap single_edge() { return build_map(2, {EdgeSpec{0, 1, false, 1}}, {{0}, {1}}); }

}  // namespace

TEST(BuildMap, SingleEdgeIsASphere) {
  auto map = single_edge();
  auto faces = trace_faces(map);
  EXPECT_EQ(map.vertex_count(), 2);
  EXPECT_EQ(map.edge_count(), 1);
  EXPECT_EQ(faces.size(), 1);
  EXPECT_EQ(classify(map).name(), "sphere");
}

TEST(BuildMap, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { build_map(2, {EdgeSpec{0, 1, false, 1}}, {{0, 0}, {1}}); }), ErrorKind::MalformedRotation);
  EXPECT_EQ(kind_of([] { build_map(2, {EdgeSpec{0, 1, false, 1}}, {{1}, {0}}); }), ErrorKind::MalformedRotation);
  EXPECT_EQ(kind_of([] { build_map(2, {EdgeSpec{0, 1, false, 1}}, {{0}, {}}); }), ErrorKind::MalformedRotation);
  EXPECT_EQ(kind_of([] { build_map(2, {EdgeSpec{0, 1, false, -1}}, {{0}, {1}}); }), ErrorKind::NegativeWeight);
  EXPECT_EQ(kind_of([] { build_map(2, {EdgeSpec{0, 1, false, 0}}, {{0}, {1}}); }), ErrorKind::NegativeWeight);
  EXPECT_EQ(kind_of([] { build_map(3, {EdgeSpec{0, 1, false, 1}}, {{0}, {1}, {}}); }), ErrorKind::DisconnectedGraph);
}

TEST(BuildMap, KleinLatticeCounts) {
  auto inst = lattice(LatticeSurface::KleinHexagon, 5, 6);
  EXPECT_EQ(inst.map.vertex_count(), 30);
  EXPECT_EQ(inst.map.edge_count(), 60);
  EXPECT_EQ(popcount(inst.map.twists()), 6);
}

TEST(TraceFaces, Loops) {
  auto plain = single_loop(false);
  EXPECT_EQ(trace_faces(plain).size(), 2);
  EXPECT_EQ(euler_characteristic(plain, trace_faces(plain)), 2);
  auto twisted = single_loop(true);
  EXPECT_EQ(trace_faces(twisted).size(), 1);
  EXPECT_EQ(euler_characteristic(twisted, trace_faces(twisted)), 1);
}

TEST(TraceFaces, EveryHalfEdgeUsedTwiceAcrossFaces) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    auto map = random_map(rng, 7, 6, 0.5, true);
    auto faces = trace_faces(map);
    std::vector<int> uses(map.half_edge_count(), 0);
    for (const auto& f : faces.faces)
      for (const auto& s : f) {
        ++uses[s.half_edge];
      }
    // Each edge is walked twice in total, in either direction.
    for (int e = 0; e < map.edge_count(); ++e) EXPECT_EQ(uses[2 * e] + uses[2 * e + 1], 2);
  }
}

TEST(TraceFaces, KleinLattice) {
  auto inst = lattice(LatticeSurface::KleinHexagon, 5, 6);
  auto faces = trace_faces(inst.map);
  EXPECT_EQ(faces.size(), 30);
  EXPECT_EQ(euler_characteristic(inst.map, faces), 0);
}

TEST(Classify, Examples) {
  auto square = lattice(LatticeSurface::Planar, 2, 2).map;
  EXPECT_TRUE(classify(square).orientable());
  EXPECT_EQ(classify(square).genus, 0);

  auto klein = classify(lattice(LatticeSurface::KleinHexagon, 5, 6).map);
  EXPECT_FALSE(klein.orientable());
  EXPECT_EQ(klein.b1, 2);
  EXPECT_EQ(klein.euler % 2, 0);

  auto rp2 = classify(single_loop(true));
  EXPECT_FALSE(rp2.orientable());
  EXPECT_EQ(rp2.b1, 1);
}

TEST(Classify, LocalOrientationSwitchKeepsSurface) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    auto map = random_map(rng, 6, 5, 0.5);
    auto before = classify(map);
    int v = std::uniform_int_distribution<int>(0, 5)(rng);
    auto after = classify(switch_local_orientation(map, v));
    EXPECT_EQ(before.kind, after.kind);
    EXPECT_EQ(before.b1, after.b1);
  }
}

TEST(StiefelWhitney, Examples) {
  auto torus = lattice(LatticeSurface::Torus, 3, 4).map;
  EXPECT_TRUE(is_zero(stiefel_whitney_cocycle(torus)));
  auto klein = lattice(LatticeSurface::KleinHexagon, 5, 6).map;
  EXPECT_EQ(popcount(stiefel_whitney_cocycle(klein)), 6);
  auto loop = single_loop(true);
  EXPECT_EQ(stiefel_whitney_cocycle(loop)[0], 1);
  // The single face walks the loop twice, so the cochain vanishes on it.
  auto faces = trace_faces(loop);
  ASSERT_EQ(faces.size(), 1);
  EXPECT_EQ(faces.faces[0].size(), 2u);
}

TEST(VertexLabels, Examples) {
  auto torus = lattice(LatticeSurface::Torus, 2, 2).map;
  auto labels = vertex_labels(torus, Bits(torus.edge_count(), 0));
  EXPECT_TRUE(is_zero(labels.minus_on_sheet0));

  // Path v0 - v1 - v2, omega = 1 on the first edge only.
  auto path = build_map(3, {EdgeSpec{0, 1, false, 1}, EdgeSpec{1, 2, false, 1}}, {{0}, {1, 2}, {3}});
  auto path_labels = vertex_labels(path, Bits{1, 0});
  EXPECT_EQ(path_labels.minus_on_sheet0, (Bits{0, 1, 1}));

  // Not cohomologous to the twists: omega = 1 on an untwisted loop.
  auto loop = single_loop(false);
  EXPECT_THROW(vertex_labels(loop, Bits{1}), Error);
}

TEST(VertexLabels, SwapFlipsEveryLabelAndTheOrientation) {
  auto klein = lattice(LatticeSurface::KleinHexagon, 3, 4).map;
  auto labels = vertex_labels(klein, klein.twists());
  auto swapped = labels.swapped();
  EXPECT_NE(labels.reversed, swapped.reversed);
  for (int v = 0; v < klein.vertex_count(); ++v)
    for (int s = 0; s < 2; ++s) EXPECT_NE(labels.minus(v, s), swapped.minus(v, s));
}

TEST(ClosedWalk, Validation) {
  auto torus = lattice(LatticeSurface::Torus, 3, 3).map;
  EXPECT_THROW(check_closed(torus, ClosedWalk{{0}}), Error);
  // Edges 0 and 1 run along row 0; 12 is the wrap-around edge of that row.
  auto row = walk_from_edges(torus, 0, {0, 1, 12});
  EXPECT_NO_THROW(check_simple(torus, row));
  EXPECT_EQ(reversed(reversed(row)).steps, row.steps);
}
