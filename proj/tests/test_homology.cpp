#include <gtest/gtest.h>

#include "pfdimers/errors.hpp"
#include "pfdimers/generators.hpp"
#include "pfdimers/homology.hpp"
#include "support.hpp"

using namespace pfdimers;

TEST(CycleBasis, Sphere) {
  auto basis = cycle_basis(lattice(LatticeSurface::Planar, 3, 3).map);
  EXPECT_EQ(basis.rank(), 0);
}

TEST(CycleBasis, ProjectiveLoop) {
  auto map = testing_support::single_loop(true);
  auto basis = cycle_basis(map);
  ASSERT_EQ(basis.rank(), 1);
  EXPECT_EQ(basis.gram(0, 0), 1);
}

TEST(CycleBasis, KleinLatticeHasIdentityForm) {
  auto inst = lattice(LatticeSurface::KleinHexagon, 5, 6);
  auto basis = cycle_basis(inst.map);
  ASSERT_EQ(basis.rank(), 2);
  // The form on H1 of the Klein bottle is diagonalizable to the identity; in
  // any basis it is non-singular with at least one odd diagonal entry.
  EXPECT_TRUE(z2_inverse(basis.gram).has_value());
  EXPECT_TRUE(basis.gram(0, 0) || basis.gram(1, 1));
  // The curve data from the generator is the diagonal basis.
  const auto& curves = inst.curves->curves;
  ASSERT_EQ(curves.size(), 2u);
  auto labels = vertex_labels(inst.map, inst.map.twists());
  auto diagonal = basis_from_cycles(inst.map, labels, {curves[0].companion, curves[1].companion});
  EXPECT_EQ(diagonal.gram, (Z2Matrix::Identity(2, 2)));
}

TEST(CycleBasis, RandomMapsGiveSimpleCyclesAndNonSingularForms) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 100; ++it) {
    auto map = random_map(rng, 8, 6, it % 2 ? 0.5 : 0.0, true);
    auto basis = cycle_basis(map);
    EXPECT_EQ(basis.rank(), classify(map).b1);
    for (int i = 0; i < basis.rank(); ++i) {
      EXPECT_TRUE(is_vertex_simple(map, basis.cycles[i]));
      // Duals evaluate to the identity on the basis.
      for (int j = 0; j < basis.rank(); ++j) EXPECT_EQ(evaluate(basis.duals[i], basis.cycles[j]), i == j ? 1 : 0);
      // C . C is the number of orientation reversals along C.
      EXPECT_EQ(basis.gram(i, i), walk_twist(map, basis.cycles[i]));
    }
    // The form is symmetric.
    EXPECT_EQ(basis.gram, Z2Matrix(basis.gram.transpose()));
  }
}

TEST(Intersection, Examples) {
  auto inst = lattice(LatticeSurface::Torus, 4, 4);
  const auto& a = inst.curves->curves[0].companion;
  const auto& b = inst.curves->curves[1].companion;
  EXPECT_EQ(intersection_number(inst.map, a, b), 1);
  EXPECT_EQ(intersection_number(inst.map, b, a), 1);
  EXPECT_EQ(intersection_number(inst.map, a, a), 0);

  // Two parallel rows share no vertex.
  auto row0 = walk_from_edges(inst.map, 0, {0, 1, 2, 24});
  auto row2 = walk_from_edges(inst.map, 8, {6, 7, 8, 26});
  EXPECT_EQ(intersection_number(inst.map, row0, row2), 0);

  auto loop = testing_support::single_loop(true);
  ClosedWalk core{{0}};
  EXPECT_EQ(intersection_number(loop, core, core), 1);
}

TEST(Intersection, FaceBoundariesAreInvisible) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 60; ++it) {
    auto map = random_map(rng, 7, 5, 0.5);
    auto basis = cycle_basis(map);
    auto faces = trace_faces(map);
    for (const auto& f : faces.faces)
      for (const auto& phi : basis.pushoffs) EXPECT_EQ(dot(phi, face_boundary_chain(map, f)), 0);
  }
}

TEST(Cocycles, Examples) {
  auto map = lattice(LatticeSurface::Torus, 3, 3).map;
  auto faces = trace_faces(map);
  Cochain1 zero(map.edge_count(), 0);
  EXPECT_TRUE(is_cocycle(map, faces, zero));
  EXPECT_TRUE(is_coboundary(map, zero));
  auto star = vertex_coboundary(map, 4);
  EXPECT_TRUE(is_cocycle(map, faces, star));
  EXPECT_TRUE(is_coboundary(map, star));
  auto basis = cycle_basis(map);
  for (const auto& phi : basis.duals) {
    EXPECT_TRUE(is_cocycle(map, faces, phi));
    EXPECT_FALSE(is_coboundary(map, phi));
  }
}

TEST(SimpleCycles, EnumeratesBothDirections) {
  auto square = lattice(LatticeSurface::Planar, 2, 2).map;
  auto cycles = enumerate_simple_cycles(square, 100);
  EXPECT_EQ(cycles.size(), 2u);
}

TEST(Curves, GeneratorDataMatchesTheGluedSides) {
  auto klein = lattice(LatticeSurface::KleinHexagon, 5, 6);
  // b1 crosses the three top edges, b2 the three bottom edges; together
  // they are exactly the twisted edges.
  const auto& curves = klein.curves->curves;
  EXPECT_EQ(popcount(curves[0].crossing), 3);
  EXPECT_EQ(popcount(curves[1].crossing), 3);
  EXPECT_EQ(xor_of(curves[0].crossing, curves[1].crossing), klein.map.twists());

  auto rp2 = lattice(LatticeSurface::ProjectivePlane, 3, 4);
  EXPECT_EQ(rp2.curves->curves[0].crossing, rp2.map.twists());

  auto torus = lattice(LatticeSurface::Torus, 3, 4);
  EXPECT_EQ(popcount(torus.curves->curves[0].crossing), 3);  // one per row
  EXPECT_EQ(popcount(torus.curves->curves[1].crossing), 4);  // one per column
}

TEST(Curves, DerivedDataPassesChecks) {
  std::mt19937_64 rng(13);
  int derived = 0;
  for (int it = 0; it < 120; ++it) {
    auto map = random_map(rng, 8, 5, it % 3 ? 0.4 : 0.0);
    try {
      auto curves = derive_curves(map);
      EXPECT_NO_THROW(check_curves(map, curves));
      ++derived;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::CurveNotRealizable);
    }
  }
  EXPECT_GT(derived, 30);
}

TEST(Curves, CompanionMustBeSimple) {
  auto torus = lattice(LatticeSurface::Torus, 3, 3).map;
  auto labels = vertex_labels(torus, Bits(torus.edge_count(), 0));
  ClosedWalk back_and_forth{{0, 1}};
  EXPECT_THROW(companion_curve(torus, labels, CurveKind::Alpha, "x", back_and_forth), Error);
}
