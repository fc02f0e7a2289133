#include "pgalois/algebra.hpp"

#include <string>

namespace pgalois {

FiniteAlgebra::FiniteAlgebra(PrimeField field, std::size_t dim, std::vector<Residue> constants, Vec unit)
    : field_(field), dim_(dim), constants_(std::move(constants)), unit_(std::move(unit)) {
  if (dim_ == 0) throw StructuralError("algebra dimension must be at least 1");
  if (constants_.size() != dim_ * dim_ * dim_)
    throw StructuralError("structure constants: expected " + std::to_string(dim_ * dim_ * dim_) +
                          " entries, got " + std::to_string(constants_.size()));
  if (unit_.size() != dim_) throw StructuralError("unit length differs from algebra dimension");
  for (Residue r : constants_)
    if (r >= field_.modulus()) throw StructuralError("structure constant not reduced mod p");
  for (Residue r : unit_)
    if (r >= field_.modulus()) throw StructuralError("unit entry not reduced mod p");
}

FiniteAlgebra FiniteAlgebra::from_products(PrimeField field, std::size_t dim,
                                           const std::function<Vec(std::size_t, std::size_t)>& product,
                                           Vec unit) {
  std::vector<Residue> sc(dim * dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vec v = product(i, j);
      if (v.size() != dim) throw StructuralError("product rule returned wrong length");
      for (std::size_t k = 0; k < dim; ++k) sc[(i * dim + j) * dim + k] = v[k];
    }
  return FiniteAlgebra(field, dim, std::move(sc), std::move(unit));
}

Vec FiniteAlgebra::basis(std::size_t i) const {
  Vec v(dim_, 0);
  v.at(i) = 1;
  return v;
}

Vec FiniteAlgebra::product(std::size_t i, std::size_t j) const {
  Vec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
  return v;
}

Vec FiniteAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw StructuralError("multiply: length mismatch");
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t xy = std::uint64_t{x[i]} * y[j] % p;
      const Residue* c = &constants_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (c[k]) acc[k] = (acc[k] + xy * c[k]) % p;
    }
  }
  return Vec(acc.begin(), acc.end());
}

Matrix FiniteAlgebra::left_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(x, basis(j)));
  return m;
}

Matrix FiniteAlgebra::right_mult(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(basis(j), x));
  return m;
}

bool FiniteAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

ValidationReport validate_algebra(const FiniteAlgebra& alg) {
  ValidationReport rep;
  const std::size_t n = alg.dim();
  if (is_zero(alg.unit())) {
    rep.fail("zero_ring", {}, "unit is zero");
    return rep;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vec b = alg.basis(j);
    if (alg.multiply(alg.unit(), b) != b || alg.multiply(b, alg.unit()) != b)
      rep.fail("unit_law", {static_cast<std::int64_t>(j)});
  }
  if (!rep.ok()) return rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = alg.multiply(ij, alg.basis(k));
        Vec rhs = alg.multiply(alg.basis(i), alg.product(j, k));
        if (lhs != rhs) {
          rep.fail("associativity",
                   {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)});
          return rep;
        }
      }
    }
  return rep;
}

Vec multiply(const FiniteAlgebra& alg, const Vec& x, const Vec& y) { return alg.multiply(x, y); }

bool is_idempotent(const FiniteAlgebra& alg, const Vec& e) { return alg.multiply(e, e) == e; }

bool is_central(const FiniteAlgebra& alg, const Vec& x) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    Vec b = alg.basis(i);
    if (alg.multiply(x, b) != alg.multiply(b, x)) return false;
  }
  return true;
}

bool is_central_idempotent(const FiniteAlgebra& alg, const Vec& e) {
  if (e.size() != alg.dim()) return false;
  return is_idempotent(alg, e) && is_central(alg, e);
}

Subspace ideal_of(const FiniteAlgebra& alg, const Vec& e) {
  return Subspace(alg.field(), alg.right_mult(e).transpose());
}

ValidationReport validate_subalgebra(const FiniteAlgebra& alg, const Matrix& rows) {
  ValidationReport rep;
  if (rows.cols() != alg.dim()) throw StructuralError("subalgebra basis has wrong width");
  const PrimeField& f = alg.field();
  if (rank(f, rows) != rows.rows()) rep.fail("dependent_rows", {});
  Subspace span(f, rows);
  if (!span.contains(f, alg.unit())) rep.fail("missing_unit", {});
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.rows(); ++j) {
      if (!span.contains(f, alg.multiply(rows.row_vec(i), rows.row_vec(j)))) {
        rep.fail("not_closed", {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
        return rep;
      }
    }
  return rep;
}

Subalgebra make_subalgebra(const FiniteAlgebra& alg, const Matrix& rows) {
  ValidationReport rep = validate_subalgebra(alg, rows);
  if (!rep.ok()) throw StructuralError("invalid subalgebra: " + rep.summary());
  return Subalgebra{Subspace(alg.field(), rows)};
}

Subalgebra prime_subring(const FiniteAlgebra& alg) {
  return Subalgebra{Subspace(alg.field(), Matrix::from_rows({alg.unit()}, alg.dim()))};
}

Subalgebra whole_algebra(const FiniteAlgebra& alg) { return Subalgebra{Subspace::whole(alg.dim())}; }

FiniteAlgebra subalgebra_as_algebra(const FiniteAlgebra& alg, const Subalgebra& sub) {
  const Subspace& s = sub.space;
  return FiniteAlgebra::from_products(
      alg.field(), s.dim(),
      [&](std::size_t i, std::size_t j) { return s.coords(alg.multiply(s.vector(i), s.vector(j))); },
      s.coords(alg.unit()));
}

bool contains_subalgebra(const PrimeField& f, const Subalgebra& outer, const Subalgebra& inner) {
  for (std::size_t i = 0; i < inner.dim(); ++i)
    if (!outer.space.contains(f, inner.element(i))) return false;
  return true;
}

}  // namespace pgalois
