#pragma once

#include <functional>
#include <vector>

#include "pgalois/linalg.hpp"
#include "pgalois/report.hpp"

namespace pgalois {

/// An associative unital algebra over F_p given by structure constants:
/// b_i * b_j = sum_k c[i][j][k] b_k.
///
/// Construction only checks shapes and reduces nothing; entries must already
/// lie in [0, p). The algebra axioms are checked by validate_algebra.
class FiniteAlgebra {
 public:
  FiniteAlgebra(PrimeField field, std::size_t dim, std::vector<Residue> constants, Vec unit);

  /// Build from a product rule on basis indices.
  static FiniteAlgebra from_products(PrimeField field, std::size_t dim,
                                     const std::function<Vec(std::size_t, std::size_t)>& product,
                                     Vec unit);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  Residue constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Residue>& constants() const { return constants_; }
  const Vec& unit() const { return unit_; }

  Vec basis(std::size_t i) const;
  Vec zero() const { return Vec(dim_, 0); }
  Vec product(std::size_t i, std::size_t j) const;

  Vec multiply(const Vec& x, const Vec& y) const;
  // Matrix of v -> x*v.
  Matrix left_mult(const Vec& x) const;
  // Matrix of v -> v*x.
  Matrix right_mult(const Vec& x) const;

  bool is_commutative() const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Residue> constants_;
  Vec unit_;
};

/// Unit law and associativity on all basis triples; rejects the zero ring.
/// Failures: "zero_ring", "unit_law" (witness j), "associativity" (i, j, k).
ValidationReport validate_algebra(const FiniteAlgebra& alg);

Vec multiply(const FiniteAlgebra& alg, const Vec& x, const Vec& y);

bool is_idempotent(const FiniteAlgebra& alg, const Vec& e);
bool is_central(const FiniteAlgebra& alg, const Vec& x);
bool is_central_idempotent(const FiniteAlgebra& alg, const Vec& e);

/// The subspace A*e for a central idempotent e.
Subspace ideal_of(const FiniteAlgebra& alg, const Vec& e);

/// A unital subalgebra B of A, stored by a reduced basis of its row space.
struct Subalgebra {
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  const Matrix& basis() const { return space.basis(); }
  Vec element(std::size_t i) const { return space.vector(i); }
};

/// Checks independence of the given rows, that their span contains the
/// unit, and closure under multiplication. Failures: "dependent_rows",
/// "missing_unit", "not_closed" (witness i, j).
ValidationReport validate_subalgebra(const FiniteAlgebra& alg, const Matrix& rows);

/// Throws StructuralError if validate_subalgebra rejects the rows.
Subalgebra make_subalgebra(const FiniteAlgebra& alg, const Matrix& rows);
Subalgebra prime_subring(const FiniteAlgebra& alg);
Subalgebra whole_algebra(const FiniteAlgebra& alg);

/// B as an algebra in its own basis (the reduced basis of `sub`).
FiniteAlgebra subalgebra_as_algebra(const FiniteAlgebra& alg, const Subalgebra& sub);

bool contains_subalgebra(const PrimeField& f, const Subalgebra& outer, const Subalgebra& inner);

}  // namespace pgalois
