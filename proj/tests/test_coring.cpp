#include <gtest/gtest.h>

#include "pgalois/coring.hpp"
#include "support/oracles.hpp"

using namespace pgalois;
using namespace pgalois::testing;

TEST(Coring, Dimensions) {
  EXPECT_EQ(build_coring(fixture_triv()).dim(), 1u);
  EXPECT_EQ(build_coring(fixture_shift()).dim(), 4u);
  EXPECT_EQ(build_coring(fixture_null()).dim(), 2u);
  EXPECT_EQ(build_coring(fixture_swap()).dim(), 4u);
}

TEST(Coring, InvalidActionRejected) {
  PartialAction pa = fixture_shift();
  pa.maps[1] = Matrix(2, 2);
  EXPECT_THROW(build_coring(pa), StructuralError);
}

TEST(Coring, TrivialGroupIsAlgebra) {
  Coring c = build_coring(fixture_triv());
  CoringElement v = c.element(0, {1});
  EXPECT_EQ(counit(c, v), (Vec{1}));
  EXPECT_EQ(comultiply(c, v), c.basic({0, 0}, {1}));
}

TEST(Coring, ShiftRightAction) {
  Coring c = build_coring(fixture_shift());
  CoringElement vs = c.element(1, {1, 1});
  EXPECT_EQ(right_act(c, vs, f1()), c.element(1, f2()));
  EXPECT_EQ(right_act(c, vs, f2()), c.zero());
  // Generic rule a' v_s . a = a' alpha_s(a e_{s^-1}) v_s, on every pair.
  const PartialAction& pa = c.action();
  for (std::size_t s = 0; s < 3; ++s)
    for_each_vector(2, 2, [&](const Vec& a1) {
      for_each_vector(2, 2, [&](const Vec& a) {
        EXPECT_EQ(right_act(c, c.element(s, a1), a), c.element(s, pa.alg.multiply(a1, pa.alpha(s, a))));
      });
    });
}

TEST(Coring, ShiftComultiply) {
  Coring c = build_coring(fixture_shift());
  // f2 v_s -> f2 v_1 (x) v_s + f2 v_s (x) v_1; the (s^2, s^2) term dies.
  TensorPower want = c.add(c.basic({0, 1}, f2()), c.basic({1, 0}, f2()));
  EXPECT_EQ(comultiply(c, c.element(1, f2())), want);
  EXPECT_TRUE(is_zero(c.basic({2, 2}, f2()).comps));
}

TEST(Coring, CounitReadsIdentityComponent) {
  Coring c = build_coring(fixture_swap());
  CoringElement x = c.add(c.element(0, f1()), c.element(1, {1, 1}));
  EXPECT_EQ(counit(c, x), f1());
}

TEST(Coring, FixtureAxioms) {
  for (const auto& fx : canonical_fixtures())
    EXPECT_TRUE(check_coring_axioms(build_coring(fx.action)).ok()) << fx.name;
}

TEST(Coring, SwappedShiftBreaksRightLinearity) {
  PartialAction pa = fixture_shift();
  std::swap(pa.maps[1], pa.maps[2]);
  ValidationReport rep = check_coring_axioms(Coring(pa));
  ASSERT_TRUE(rep.has("delta_right_linear"));
  EXPECT_EQ(rep.first("delta_right_linear")->witness.size(), 3u);
  EXPECT_FALSE(validate_partial_action(pa).ok());
}

TEST(Coring, GrouplikeOnFixtures) {
  for (const auto& fx : canonical_fixtures()) {
    Coring c = build_coring(fx.action);
    CoringElement x = grouplike(c);
    EXPECT_EQ(counit(c, x), fx.action.alg.unit());
    EXPECT_EQ(comultiply(c, x), c.tensor(c.as_tensor(x), c.as_tensor(x)));
  }
}

TEST(Coring, ShiftGrouplikeCoaction) {
  Coring c = build_coring(fixture_shift());
  EXPECT_EQ(grouplike_coaction(c, f1()), c.add(c.element(0, f1()), c.element(1, f2())));
}

TEST(Sweedler, Dimensions) {
  PartialAction swap = fixture_swap();
  EXPECT_EQ(sweedler_coring(swap.alg, whole_algebra(swap.alg)).pair.dim, 2u);
  EXPECT_EQ(sweedler_coring(swap.alg, invariants(swap)).pair.dim, 4u);
  PartialAction triv = fixture_triv();
  EXPECT_EQ(sweedler_coring(triv.alg, prime_subring(triv.alg)).pair.dim, 1u);
}

TEST(Galois, SwapIsGalois) {
  PartialAction pa = fixture_swap();
  GaloisVerdict v = canonical_map(pa, invariants(pa));
  EXPECT_EQ(v.can_matrix.rows(), 4u);
  EXPECT_EQ(v.can_matrix.cols(), 4u);
  EXPECT_TRUE(v.bijective);
  EXPECT_TRUE(v.coring_morphism_ok);
}

TEST(Galois, ShiftCanImages) {
  PartialAction pa = fixture_shift();
  Coring c = build_coring(pa);
  Subalgebra t = invariants(pa);
  GaloisVerdict v = canonical_map(pa, t);
  ASSERT_TRUE(v.bijective);
  SweedlerCoring d = sweedler_coring(pa.alg, t);
  const PrimeField& f = pa.field();
  // Over F_2 1 the quotient is all of A (x) A; index i*2 + j.
  ASSERT_EQ(d.pair.dim, 4u);
  const std::vector<CoringElement> want = {c.element(0, f1()), c.element(2, f1()), c.element(1, f2()),
                                           c.element(0, f2())};
  for (std::size_t ij = 0; ij < 4; ++ij) {
    Vec raw(4, 0);
    raw[ij] = 1;
    Vec image = mat_vec(f, v.can_matrix, d.pair.project(f, raw));
    EXPECT_EQ(image, c.coords(want[ij])) << ij;
  }
}

TEST(Galois, FixtureVerdicts) {
  EXPECT_TRUE(is_partial_galois(fixture_shift()));
  EXPECT_TRUE(is_partial_galois(fixture_null()));
  EXPECT_TRUE(is_partial_galois(fixture_triv()));
  EXPECT_FALSE(is_partial_galois(fixture_trivact()));
  GaloisVerdict v = canonical_map(fixture_trivact(), invariants(fixture_trivact()));
  EXPECT_EQ(v.source_dim, 2u);
  EXPECT_EQ(v.target_dim, 4u);
  EXPECT_TRUE(v.coring_morphism_ok);
}

TEST(Galois, BaseOutsideInvariantsRejected) {
  PartialAction pa = fixture_shift();
  try {
    canonical_map(pa, whole_algebra(pa.alg));
    FAIL() << "expected NotInvariantError";
  } catch (const NotInvariantError& e) {
    Vec b = whole_algebra(pa.alg).element(e.basis_index);
    EXPECT_NE(pa.alpha(e.group_element, b), pa.alg.multiply(b, pa.e(e.group_element)));
  }
}

TEST(Coring, RandomCorpusAxioms) {
  for (std::size_t k = 0; k < 30; ++k) {
    RandomInstance inst = corpus_instance(23, k);
    Coring c = build_coring(inst.action);
    EXPECT_TRUE(check_coring_axioms(c).ok()) << inst.description;
    EXPECT_NO_THROW(grouplike(c)) << inst.description;
  }
}

TEST(Coring, MutationsDetected) {
  for (std::size_t k = 0; k < 20; ++k) {
    Mutation m = corpus_mutation(29, k);
    EXPECT_TRUE(validate_partial_action(m.action).has("compatibility")) << m.description;
    EXPECT_TRUE(check_coring_axioms(Coring(m.action)).has("delta_right_linear")) << m.description;
  }
}
