#include <gtest/gtest.h>

#include "pgalois/morita.hpp"
#include "support/oracles.hpp"

using namespace pgalois;
using namespace pgalois::testing;

namespace {

DualElement sum_u_e(const PartialAction& pa) {
  DualElement x = dual_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s) x = dual_add(pa, x, dual_basic(pa, s, pa.e(s)));
  return x;
}

/// Number of linear maps on F_2^n commuting with left multiplication by B.
std::size_t brute_end_count(const PartialAction& pa, const Subalgebra& sub) {
  const std::size_t n = pa.dim();
  const PrimeField& f = pa.field();
  std::size_t count = 0;
  for_each_vector(f.modulus(), n * n, [&](const Vec& entries) {
    Matrix phi(n, n);
    for (std::size_t i = 0; i < n * n; ++i) phi(i / n, i % n) = entries[i];
    for (std::size_t k = 0; k < sub.dim(); ++k) {
      Matrix lb = pa.alg.left_mult(sub.element(k));
      if (mat_mul(f, phi, lb) != mat_mul(f, lb, phi)) return;
    }
    ++count;
  });
  return count;
}

}  // namespace

TEST(DualRing, FixtureSuites) {
  for (const auto& fx : canonical_fixtures()) {
    EXPECT_TRUE(check_dual_ring(fx.action).ok()) << fx.name;
    EXPECT_TRUE(dual_vs_skew(fx.action).ok()) << fx.name;
  }
}

TEST(DualRing, LeftActionRule) {
  for (const auto& fx : canonical_fixtures()) {
    const PartialAction& pa = fx.action;
    for (std::size_t t = 0; t < pa.order(); ++t)
      for_each_vector(2, pa.dim(), [&](const Vec& b) {
        EXPECT_EQ(dual_multiply(pa, j_embed(pa, b), dual_basic(pa, t, pa.alg.unit())),
                  dual_basic(pa, t, pa.alpha(t, b)));
      });
  }
}

TEST(DualRing, ShiftSquareVanishes) {
  PartialAction pa = fixture_shift();
  DualElement x = dual_basic(pa, 1, f2());
  EXPECT_EQ(dual_multiply(pa, x, x), dual_zero(pa));
}

TEST(DualRing, GlobalProductOfGenerators) {
  PartialAction pa = fixture_swap();
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t) {
      DualElement us = dual_basic(pa, s, pa.alg.unit());
      DualElement ut = dual_basic(pa, t, pa.alg.unit());
      EXPECT_EQ(dual_multiply(pa, us, ut), dual_basic(pa, pa.grp.mul(s, t), pa.alg.unit()));
    }
}

TEST(DualRing, FunctionalCompositionAgrees) {
  PartialAction pa = fixture_shift();
  Coring c = build_coring(pa);
  DualRing d = dual_ring(pa);
  for (std::size_t k = 0; k < d.algebra.dim(); ++k)
    for (std::size_t l = 0; l < d.algebra.dim(); ++l)
      EXPECT_EQ(dual_multiply(pa, d.basis_element(k), d.basis_element(l)),
                compose_functionals(c, d.basis_element(k), d.basis_element(l)));
}

TEST(DualRing, SkewComparisonNeedsCommutative) {
  PrimeField f(2);
  FiniteAlgebra m = matrix_algebra(f, 2);
  PartialAction pa{m, cyclic_group(1), {m.unit()}, {Matrix::identity(4)}};
  EXPECT_THROW(dual_vs_skew(pa), StructuralError);
}

TEST(Frobenius, FixturesPass) {
  for (const auto& fx : canonical_fixtures()) {
    const PartialAction& pa = fx.action;
    EXPECT_TRUE(frobenius_check(pa).ok()) << fx.name;
    DualTensor e = casimir(pa);
    DualElement one = j_embed(pa, pa.alg.unit());
    EXPECT_EQ(contract_left(pa, e), one) << fx.name;
    EXPECT_EQ(contract_right(pa, e), one) << fx.name;
  }
}

TEST(Frobenius, TrivialCasimir) {
  PartialAction pa = fixture_triv();
  EXPECT_EQ(casimir(pa), dual_tensor_basic(pa, 0, 0, {1}));
}

TEST(Frobenius, ShiftHandCase) {
  PartialAction pa = fixture_shift();
  DualElement r = dual_basic(pa, 1, f2());
  DualElement u1 = dual_basic(pa, 0, pa.alg.unit());
  DualElement us = dual_basic(pa, 1, pa.alg.unit());
  DualTensor want = dual_tensor_add(pa, dual_tensor(pa, us, dual_basic(pa, 0, f2())), dual_tensor(pa, u1, r));
  DualTensor e = casimir(pa);
  EXPECT_EQ(left_multiply(pa, r, e), want);
  EXPECT_EQ(right_multiply(pa, e, r), want);
}

TEST(Morita, QEmbedding) {
  PartialAction pa = fixture_shift();
  EXPECT_EQ(q_embed(pa, pa.alg.unit()), sum_u_e(pa));
  EXPECT_TRUE(q_member(pa, q_embed(pa, pa.alg.unit())));
  EXPECT_EQ(q_embed(pa, f1()), dual_add(pa, dual_basic(pa, 0, f1()), dual_basic(pa, 1, f2())));
  EXPECT_FALSE(q_member(pa, dual_basic(pa, 1, f2())));
}

TEST(Morita, PairingValues) {
  for (const auto& fx : canonical_fixtures()) {
    const PartialAction& pa = fx.action;
    const PrimeField& f = pa.field();
    Vec sum_e = pa.alg.zero();
    for (std::size_t s = 0; s < pa.order(); ++s) sum_e = f.sum(sum_e, pa.e(s));
    EXPECT_EQ(morita_tau(pa, pa.alg.unit(), pa.alg.unit()), sum_e) << fx.name;
    EXPECT_EQ(morita_mu(pa, pa.alg.unit(), pa.alg.unit()), sum_u_e(pa)) << fx.name;
    EXPECT_TRUE(morita_context(pa).report.ok()) << fx.name;
  }
  PartialAction shift = fixture_shift();
  EXPECT_EQ(morita_tau(shift, shift.alg.unit(), f1()), shift.alg.unit());
}

TEST(Morita, TauWitness) {
  EXPECT_EQ(tau_surjectivity(fixture_shift()), std::optional<Vec>(f1()));
  EXPECT_EQ(tau_surjectivity(fixture_triv()), std::optional<Vec>(Vec{1}));
  EXPECT_FALSE(tau_surjectivity(fixture_trivact()));
  for (const auto& fx : canonical_fixtures()) {
    EXPECT_EQ(tau_surjectivity(fx.action).has_value(), brute_tau_witness(fx.action).has_value()) << fx.name;
    EXPECT_EQ(tau_surjectivity(fx.action).has_value(), tau_span_is_invariants(fx.action)) << fx.name;
  }
}

TEST(Morita, MuSurjectivity) {
  EXPECT_TRUE(mu_surjectivity(fixture_shift()));
  EXPECT_FALSE(mu_surjectivity(fixture_trivact()));
  EXPECT_TRUE(mu_surjectivity(fixture_triv()));
}

TEST(StarCan, EndomorphismDimensions) {
  PartialAction shift = fixture_shift();
  StarCanVerdict v = star_can(shift, invariants(shift));
  EXPECT_EQ(v.end_dim, 4u);
  EXPECT_EQ(v.dual_dim, 4u);
  EXPECT_TRUE(v.bijective());
  PartialAction trivact = fixture_trivact();
  StarCanVerdict w = star_can(trivact, invariants(trivact));
  EXPECT_EQ(w.end_dim, 2u);
  EXPECT_FALSE(w.bijective());
  EXPECT_TRUE(star_can(fixture_triv(), invariants(fixture_triv())).bijective());
  for (const auto& fx : canonical_fixtures()) {
    Subalgebra t = invariants(fx.action);
    EXPECT_EQ(space_size(2, star_can(fx.action, t).end_dim), brute_end_count(fx.action, t)) << fx.name;
  }
}

TEST(Progenerator, Examples) {
  PartialAction shift = fixture_shift();
  EXPECT_TRUE(progenerator_check(shift.alg, prime_subring(shift.alg)).progenerator());
  EXPECT_TRUE(progenerator_check(shift.alg, whole_algebra(shift.alg)).progenerator());
  ModuleRep part{1, Side::left, {Matrix(1, 1), Matrix::identity(1)}};
  ProgeneratorReport r = progenerator_check(shift.alg, part);
  EXPECT_TRUE(r.projective);
  EXPECT_FALSE(r.generator);
  EXPECT_EQ(r.trace_dim, 1u);
}

TEST(Dashboard, FixtureRows) {
  Dashboard shift = theorem_dashboard(fixture_shift(), invariants(fixture_shift()));
  EXPECT_TRUE(shift.consistent());
  EXPECT_TRUE(shift.can_bijective && shift.cond2 && shift.cond3 && shift.cond4_probe);
  Dashboard swap = theorem_dashboard(fixture_swap(), invariants(fixture_swap()));
  EXPECT_TRUE(swap.consistent());
  EXPECT_TRUE(swap.can_bijective && swap.cond1 && swap.cond2 && swap.cond3 && swap.cond4_probe);
  Dashboard trivact = theorem_dashboard(fixture_trivact(), invariants(fixture_trivact()));
  EXPECT_TRUE(trivact.consistent());
  EXPECT_FALSE(trivact.can_bijective);
  EXPECT_FALSE(trivact.cond2);
  EXPECT_FALSE(trivact.cond3);
  EXPECT_FALSE(trivact.tau_surjective);
}

TEST(Dashboard, RandomCorpusConsistent) {
  for (std::size_t k = 0; k < 30; ++k) {
    RandomInstance inst = corpus_instance(37, k);
    Dashboard d = theorem_dashboard(inst.action, invariants(inst.action));
    EXPECT_TRUE(d.consistent()) << inst.description;
  }
}
