#include <gtest/gtest.h>

#include <set>

#include "pgalois/algebra.hpp"
#include "pgalois/group.hpp"
#include "pgalois/quotient.hpp"
#include "support/oracles.hpp"

using namespace pgalois;
using namespace pgalois::testing;

namespace {

const PrimeField F2(2);

}  // namespace

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(5));
}

TEST(PrimeField, InverseTable) {
  PrimeField f(7);
  for (Residue a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_EQ(f.reduce(-1), 6u);
}

TEST(Algebra, FieldAndProductAccepted) {
  EXPECT_TRUE(validate_algebra(split_algebra(F2, 1)).ok());
  EXPECT_TRUE(validate_algebra(split_algebra(F2, 2)).ok());
  EXPECT_TRUE(validate_algebra(matrix_algebra(F2, 2)).ok());
}

TEST(Algebra, FlippedConstantBreaksUnitLaw) {
  FiniteAlgebra a = split_algebra(F2, 2);
  std::vector<Residue> c = a.constants();
  c[(0 * 2 + 1) * 2 + 0] = 1;
  ValidationReport rep = validate_algebra(FiniteAlgebra(F2, 2, c, {1, 1}));
  // b0 * b1 = b0 now, so 1 * b1 = b0 + b1 and b0 * 1 = 0: both indices fail.
  std::vector<std::vector<std::int64_t>> witnesses;
  for (const Failure& f : rep.failures())
    if (f.condition == "unit_law") witnesses.push_back(f.witness);
  EXPECT_EQ(witnesses, (std::vector<std::vector<std::int64_t>>{{0}, {1}}));
}

TEST(Algebra, ZeroRingRejected) {
  FiniteAlgebra z(F2, 1, {0}, {0});
  EXPECT_TRUE(validate_algebra(z).has("zero_ring"));
}

TEST(Algebra, OrthogonalIdempotents) {
  FiniteAlgebra a = split_algebra(F2, 2);
  EXPECT_EQ(multiply(a, f1(), f2()), (Vec{0, 0}));
  EXPECT_EQ(multiply(a, f1(), f1()), f1());
  EXPECT_EQ(multiply(a, a.unit(), Vec{1, 1}), (Vec{1, 1}));
}

TEST(Algebra, CentralIdempotents) {
  FiniteAlgebra a = split_algebra(F2, 2);
  EXPECT_TRUE(is_central_idempotent(a, f2()));
  EXPECT_TRUE(is_central_idempotent(a, a.unit()));
  FiniteAlgebra m = matrix_algebra(F2, 2);
  Vec e11{1, 0, 0, 0};
  EXPECT_TRUE(is_idempotent(m, e11));
  EXPECT_FALSE(is_central_idempotent(m, e11));
}

TEST(Algebra, SubalgebraChecks) {
  FiniteAlgebra a = split_algebra(F2, 2);
  EXPECT_TRUE(validate_subalgebra(a, Matrix::from_rows({{1, 1}}, 2)).ok());
  EXPECT_TRUE(validate_subalgebra(a, Matrix::from_rows({{1, 0}}, 2)).has("missing_unit"));
  EXPECT_TRUE(validate_subalgebra(a, Matrix::from_rows({{1, 1}, {1, 1}}, 2)).has("dependent_rows"));
  FiniteAlgebra m = matrix_algebra(F2, 2);
  // span{1, E12 + E21} is closed; span{1, E12, E21} is not.
  EXPECT_TRUE(validate_subalgebra(m, Matrix::from_rows({{1, 0, 0, 1}, {0, 1, 1, 0}}, 4)).ok());
  EXPECT_TRUE(validate_subalgebra(m, Matrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}, 4))
                  .has("not_closed"));
}

TEST(Group, CyclicTablesAccepted) {
  EXPECT_TRUE(validate_group(cyclic_group(3)).ok());
  EXPECT_TRUE(validate_group(cyclic_group(2)).ok());
  EXPECT_TRUE(validate_group(klein_four_group()).ok());
  FiniteGroup g = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_TRUE(validate_group(g).ok());
  EXPECT_EQ(g.order, 4u);
}

TEST(Group, TransposedEntryBreaksAssociativity) {
  // A Latin square with identity 0 and inverses, but not associative.
  std::vector<std::size_t> t = {0, 1, 2, 3, 4,  //
                                1, 0, 3, 4, 2,  //
                                2, 4, 0, 1, 3,  //
                                3, 2, 4, 0, 1,  //
                                4, 3, 1, 2, 0};
  ValidationReport rep = validate_group(FiniteGroup::from_table(5, t));
  ASSERT_TRUE(rep.has("associativity"));
  EXPECT_EQ(rep.first("associativity")->witness.size(), 3u);
}

TEST(LinearAlgebra, SolveAndKernel) {
  auto x = solve_affine(F2, Matrix::identity(2), {1, 0});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vec{1, 0}));
  EXPECT_FALSE(solve_affine(F2, Matrix::zero(2, 2), {1, 0}));
  Matrix k = kernel(F2, Matrix::from_rows({{1, 1}}, 2));
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k.row_vec(0), (Vec{1, 1}));
}

TEST(LinearAlgebra, RankMatchesEnumeration) {
  PrimeField f(3);
  Matrix m = Matrix::from_rows({{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 1, 1, 0}}, 4);
  // Count images of all x in F_3^3 under the row space map.
  std::set<Vec> image;
  for_each_vector(3, 3, [&](const Vec& c) { image.insert(mat_vec(f, m.transpose(), c)); });
  EXPECT_EQ(space_size(3, rank(f, m)), image.size());
}

TEST(LinearAlgebra, InverseRoundTrip) {
  PrimeField f(5);
  Matrix m = Matrix::from_rows({{1, 2, 3}, {0, 1, 4}, {2, 0, 1}}, 3);
  auto inv = inverse(f, m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(mat_mul(f, m, *inv), Matrix::identity(3));
}

TEST(Quotient, Shapes) {
  QuotientSpace none = build_quotient(F2, 4, Matrix(0, 4));
  EXPECT_EQ(none.dim, 4u);
  EXPECT_EQ(none.projection, Matrix::identity(4));
  QuotientSpace all = build_quotient(F2, 2, Matrix::identity(2));
  EXPECT_EQ(all.dim, 0u);
  Matrix rel = Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}}, 4);
  QuotientSpace q = build_quotient(F2, 4, rel);
  EXPECT_EQ(q.dim, 2u);
  EXPECT_EQ(mat_mul(F2, q.projection, q.section), Matrix::identity(2));
  for (std::size_t i = 0; i < rel.rows(); ++i) EXPECT_TRUE(is_zero(q.project(F2, rel.row_vec(i))));
}
