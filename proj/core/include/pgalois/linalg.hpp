#pragma once

#include <optional>
#include <vector>

#include "pgalois/matrix.hpp"

namespace pgalois {

/// Reduced row echelon form with its pivot columns.
///
/// Pivoting is fixed: columns are scanned left to right and the pivot is the
/// lowest-indexed remaining row with a nonzero entry in that column. Equal
/// inputs therefore always give identical outputs.
struct RowEchelon {
  Matrix reduced;                    // same shape as the input
  std::vector<std::size_t> pivots;   // pivot column of row i, for i < rank
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(const PrimeField& f, Matrix m);
std::size_t rank(const PrimeField& f, const Matrix& m);

/// Null space basis of m, one basis vector per row (k x m.cols()).
Matrix kernel(const PrimeField& f, const Matrix& m);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vec> solve_affine(const PrimeField& f, const Matrix& m, const Vec& rhs);

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& m);

/// Linearly independent rows spanning the row space of m, in reduced form.
Matrix row_basis(const PrimeField& f, const Matrix& m);

/// Column space basis as rows (k x m.rows()).
inline Matrix image_basis(const PrimeField& f, const Matrix& m) {
  return row_basis(f, m.transpose());
}

/// A subspace of F_p^n kept in reduced row echelon form, so coordinates of a
/// member are read directly off the pivot columns.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const PrimeField& f, const Matrix& spanning_rows);
  static Subspace whole(std::size_t n);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row_vec(i); }

  bool contains(const PrimeField& f, const Vec& v) const;
  // Coordinates of v, assuming contains(v).
  Vec coords(const Vec& v) const;
  Vec from_coords(const PrimeField& f, const Vec& c) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// A direct sum of subspaces of F_p^n, one per block. Elements are stored
/// flat (block b occupies entries [b*n, (b+1)*n)); coordinates run over the
/// concatenated reduced bases.
class BlockSpace {
 public:
  BlockSpace() = default;
  BlockSpace(std::size_t block_ambient, std::vector<Subspace> blocks);

  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_ambient() const { return n_; }
  std::size_t flat_size() const { return n_ * blocks_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t offset(std::size_t b) const { return offsets_[b]; }
  const Subspace& block(std::size_t b) const { return blocks_[b]; }

  // Block index and vector in F_p^n of coordinate basis element k.
  std::pair<std::size_t, Vec> basis_element(std::size_t k) const;
  Vec flat_basis_element(std::size_t k) const;

  bool contains(const PrimeField& f, const Vec& flat) const;
  Vec coords(const Vec& flat) const;
  Vec from_coords(const PrimeField& f, const Vec& c) const;

 private:
  std::size_t n_ = 0;
  std::vector<Subspace> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

Vec block_of(const Vec& flat, std::size_t b, std::size_t n);
void add_to_block(const PrimeField& f, Vec& flat, std::size_t b, std::size_t n, const Vec& v);

}  // namespace pgalois
