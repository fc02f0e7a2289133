#include <gtest/gtest.h>

#include "pgalois/partial_action.hpp"
#include "support/oracles.hpp"

using namespace pgalois;
using namespace pgalois::testing;

TEST(PartialAction, FixturesValid) {
  for (const auto& fx : canonical_fixtures()) EXPECT_TRUE(validate_partial_action(fx.action).ok()) << fx.name;
}

TEST(PartialAction, ZeroedShiftMapRejectedForRank) {
  PartialAction pa = fixture_shift();
  pa.maps[1] = Matrix(2, 2);
  ValidationReport rep = validate_partial_action(pa);
  ASSERT_TRUE(rep.has("bijective"));
  EXPECT_EQ(rep.first("bijective")->witness, (std::vector<std::int64_t>{1, 0}));
}

TEST(PartialAction, SwappedShiftMapsRejected) {
  PartialAction pa = fixture_shift();
  std::swap(pa.maps[1], pa.maps[2]);
  EXPECT_FALSE(validate_partial_action(pa).ok());
}

TEST(PartialAction, NonCentralIdempotentRejected) {
  PrimeField f(2);
  FiniteAlgebra m = matrix_algebra(f, 2);
  PartialAction pa{m, cyclic_group(2), {m.unit(), {1, 0, 0, 0}}, {Matrix::identity(4), Matrix(4, 4)}};
  EXPECT_TRUE(validate_partial_action(pa).has("central_idempotent"));
}

TEST(PartialAction, ShiftAlpha) {
  PartialAction pa = fixture_shift();
  EXPECT_EQ(alpha_apply(pa, 1, f1()), f2());
  EXPECT_EQ(alpha_apply(pa, 1, f2()), (Vec{0, 0}));
  for (const auto& fx : canonical_fixtures())
    for_each_vector(2, fx.action.dim(), [&](const Vec& a) { EXPECT_EQ(alpha_apply(fx.action, 0, a), a); });
}

TEST(PartialAction, InvariantsMatchEnumeration) {
  EXPECT_EQ(invariants(fixture_swap()).basis(), Matrix::from_rows({{1, 1}}, 2));
  EXPECT_EQ(invariants(fixture_shift()).basis(), Matrix::from_rows({{1, 1}}, 2));
  EXPECT_EQ(invariants(fixture_null()).dim(), 2u);
  for (const auto& fx : canonical_fixtures())
    EXPECT_EQ(space_size(2, invariants(fx.action).dim()), brute_invariant_count(fx.action)) << fx.name;
}

TEST(PartialAction, RestrictionOfShiftIsFixture) {
  Restriction r = restrict_global_action(shift_on_f2_cubed(), shift_restriction_idempotent());
  PartialAction want = fixture_shift();
  EXPECT_EQ(r.action.alg, want.alg);
  EXPECT_EQ(r.action.idem, want.idem);
  EXPECT_EQ(r.action.maps, want.maps);
}

TEST(PartialAction, RestrictionAlongUnitIsGlobal) {
  GlobalActionInstance ga = shift_on_f2_cubed();
  Restriction r = restrict_global_action(ga, ga.amb.unit());
  for (std::size_t s = 0; s < 3; ++s) {
    EXPECT_EQ(r.action.e(s), ga.amb.unit());
    EXPECT_EQ(r.action.maps[s], ga.autos[s]);
  }
}

TEST(PartialAction, SwapRestrictedToOneFactorIsDegenerate) {
  PartialAction swap = fixture_swap();
  GlobalActionInstance ga{swap.alg, swap.grp, swap.maps};
  Restriction r = restrict_global_action(ga, f1());
  EXPECT_EQ(r.action.dim(), 1u);
  EXPECT_EQ(r.action.e(1), (Vec{0}));
  EXPECT_TRUE(validate_partial_action(r.action).ok());
}

TEST(PartialAction, RestrictionRejectsBadIdempotent) {
  GlobalActionInstance ga = shift_on_f2_cubed();
  EXPECT_THROW(restrict_global_action(ga, {0, 0, 0}), StructuralError);
  PrimeField f(3);
  GlobalActionInstance g3{split_algebra(f, 2), cyclic_group(1), {Matrix::identity(2)}};
  EXPECT_THROW(restrict_global_action(g3, {2, 0}), StructuralError);
}

TEST(SkewGroupRing, Dimensions) {
  EXPECT_EQ(skew_group_ring(fixture_triv()).algebra.dim(), 1u);
  EXPECT_EQ(skew_group_ring(fixture_shift()).algebra.dim(), 4u);
  EXPECT_EQ(skew_group_ring(fixture_swap()).algebra.dim(), 4u);
  for (const auto& fx : canonical_fixtures())
    EXPECT_TRUE(validate_algebra(skew_group_ring(fx.action).algebra).ok()) << fx.name;
}

TEST(PartialAction, RandomCorpusValid) {
  for (std::size_t k = 0; k < 40; ++k) {
    RandomInstance inst = corpus_instance(11, k);
    EXPECT_TRUE(validate_partial_action(inst.action).ok()) << inst.description;
    if (space_size(inst.action.field().modulus(), inst.action.dim()) <= 4096)
      EXPECT_EQ(space_size(inst.action.field().modulus(), invariants(inst.action).dim()),
                brute_invariant_count(inst.action))
          << inst.description;
  }
}
