#include "pgalois/quotient.hpp"

#include <stdexcept>

namespace pgalois {

QuotientSpace build_quotient(const PrimeField& f, std::size_t ambient_dim, const Matrix& relations) {
  if (!relations.empty() && relations.cols() != ambient_dim)
    throw std::invalid_argument("build_quotient: relation width differs from ambient dimension");

  QuotientSpace q;
  q.ambient = ambient_dim;
  std::vector<std::size_t> pivots;
  if (relations.rows() > 0) {
    RowEchelon e = rref(f, relations);
    q.relations = Matrix(e.rank(), ambient_dim);
    for (std::size_t i = 0; i < e.rank(); ++i)
      for (std::size_t j = 0; j < ambient_dim; ++j) q.relations(i, j) = e.reduced(i, j);
    pivots = e.pivots;
  } else {
    q.relations = Matrix(0, ambient_dim);
  }

  std::vector<long> pivot_row(ambient_dim, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long>(r);
  std::vector<std::size_t> free_cols;
  std::vector<long> free_index(ambient_dim, -1);
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (pivot_row[c] < 0) {
      free_index[c] = static_cast<long>(free_cols.size());
      free_cols.push_back(c);
    }
  }

  q.dim = free_cols.size();
  q.projection = Matrix(q.dim, ambient_dim);
  q.section = Matrix(ambient_dim, q.dim);
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (free_index[c] >= 0) {
      q.projection(static_cast<std::size_t>(free_index[c]), c) = 1;
    } else {
      // e_c is congruent to e_c - row, which lives on the free columns.
      auto r = static_cast<std::size_t>(pivot_row[c]);
      for (std::size_t k = 0; k < q.dim; ++k)
        q.projection(k, c) = f.neg(q.relations(r, free_cols[k]));
    }
  }
  for (std::size_t k = 0; k < q.dim; ++k) q.section(free_cols[k], k) = 1;
  return q;
}

}  // namespace pgalois
