#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgalois/field.hpp"

namespace pgalois {

/// Dense row-major matrix of residues. Linear maps act on column vectors:
/// column j holds the image of the j-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Residue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Residue> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vec row_vec(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_column(std::size_t j, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

Matrix mat_mul(const PrimeField& f, const Matrix& a, const Matrix& b);
Vec mat_vec(const PrimeField& f, const Matrix& a, const Vec& v);
Matrix mat_add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix mat_sub(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const PrimeField& f, const Matrix& a, Residue c);
// Stack blocks vertically; all blocks must share a column count.
Matrix vstack(const std::vector<Matrix>& blocks);
// Block-diagonal sum of square or rectangular blocks.
Matrix block_diagonal(const std::vector<Matrix>& blocks);
// Kronecker product a (x) b.
Matrix kronecker(const PrimeField& f, const Matrix& a, const Matrix& b);

}  // namespace pgalois
