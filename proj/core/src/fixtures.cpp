#include "pgalois/fixtures.hpp"

namespace pgalois {

namespace {

const PrimeField kF2(2);

Matrix cols(std::vector<Vec> columns, std::size_t rows) { return Matrix::from_columns(columns, rows); }

}  // namespace

FiniteAlgebra split_algebra(const PrimeField& f, std::size_t k) {
  return FiniteAlgebra::from_products(
      f, k,
      [k](std::size_t i, std::size_t j) {
        Vec v(k, 0);
        if (i == j) v[i] = 1;
        return v;
      },
      Vec(k, 1));
}

PartialAction fixture_triv() {
  return PartialAction{split_algebra(kF2, 1), cyclic_group(1), {{1}}, {Matrix::identity(1)}};
}

PartialAction fixture_swap() {
  return PartialAction{split_algebra(kF2, 2), cyclic_group(2), {{1, 1}, {1, 1}},
                       {Matrix::identity(2), cols({{0, 1}, {1, 0}}, 2)}};
}

PartialAction fixture_shift() {
  // L_s sends f1 to f2 and kills f2; L_{s^2} sends f2 to f1 and kills f1.
  return PartialAction{split_algebra(kF2, 2),
                       cyclic_group(3),
                       {{1, 1}, {0, 1}, {1, 0}},
                       {Matrix::identity(2), cols({{0, 1}, {0, 0}}, 2), cols({{0, 0}, {1, 0}}, 2)}};
}

PartialAction fixture_null() {
  return PartialAction{split_algebra(kF2, 2), cyclic_group(2), {{1, 1}, {0, 0}}, {Matrix::identity(2), Matrix(2, 2)}};
}

PartialAction fixture_trivact() {
  return PartialAction{split_algebra(kF2, 2), cyclic_group(2), {{1, 1}, {1, 1}},
                       {Matrix::identity(2), Matrix::identity(2)}};
}

GlobalActionInstance shift_on_f2_cubed() {
  Matrix shift = cols({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, 3);
  return GlobalActionInstance{split_algebra(kF2, 3), cyclic_group(3),
                              {Matrix::identity(3), shift, mat_mul(kF2, shift, shift)}};
}

Vec shift_restriction_idempotent() { return {1, 1, 0}; }

std::vector<NamedFixture> canonical_fixtures() {
  return {{"FIX-TRIV", fixture_triv()},
          {"FIX-SWAP", fixture_swap()},
          {"FIX-SHIFT", fixture_shift()},
          {"FIX-NULL", fixture_null()},
          {"FIX-TRIVACT", fixture_trivact()}};
}

}  // namespace pgalois
