#pragma once

#include "pgalois/linalg.hpp"

namespace pgalois {

/// F_p^m modulo the span of a set of relations.
///
/// Quotient coordinates are the non-pivot columns of the reduced relation
/// matrix. `projection` (q x m) kills exactly the relation span and
/// `section` (m x q) is a right inverse of it.
struct QuotientSpace {
  std::size_t ambient = 0;
  Matrix relations;   // reduced basis of the relation span
  std::size_t dim = 0;
  Matrix projection;
  Matrix section;

  Vec project(const PrimeField& f, const Vec& v) const { return mat_vec(f, projection, v); }
  Vec lift(const PrimeField& f, const Vec& q) const { return mat_vec(f, section, q); }
};

QuotientSpace build_quotient(const PrimeField& f, std::size_t ambient_dim, const Matrix& relations);

}  // namespace pgalois
