#include "pgalois/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgalois {

RowEchelon rref(const PrimeField& f, Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    Residue s = f.inv(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Residue factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const PrimeField& f, const Matrix& m) { return rref(f, m).rank(); }

Matrix kernel(const PrimeField& f, const Matrix& m) {
  RowEchelon e = rref(f, m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(basis, cols);
}

std::optional<Vec> solve_affine(const PrimeField& f, const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_affine: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i] % f.modulus();
  }
  RowEchelon e = rref(f, std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const PrimeField& f, const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(f, std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix row_basis(const PrimeField& f, const Matrix& m) {
  RowEchelon e = rref(f, m);
  Matrix out(e.rank(), m.cols());
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = e.reduced(i, j);
  return out;
}

Subspace::Subspace(const PrimeField& f, const Matrix& spanning_rows) : ambient_(spanning_rows.cols()) {
  RowEchelon e = rref(f, spanning_rows);
  basis_ = Matrix(e.rank(), ambient_);
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) basis_(i, j) = e.reduced(i, j);
  pivots_ = std::move(e.pivots);
}

Subspace Subspace::whole(std::size_t n) {
  Subspace s;
  s.ambient_ = n;
  s.basis_ = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
  return s;
}

bool Subspace::contains(const PrimeField& f, const Vec& v) const {
  if (v.size() != ambient_) return false;
  Vec rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Residue c = rest[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) rest[j] = f.sub(rest[j], f.mul(c, basis_(i, j)));
  }
  return is_zero(rest);
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::from_coords(const PrimeField& f, const Vec& c) const {
  Vec v(ambient_, 0);
  for (std::size_t i = 0; i < dim(); ++i) f.axpy(v, c[i], basis_.row_vec(i));
  return v;
}

BlockSpace::BlockSpace(std::size_t block_ambient, std::vector<Subspace> blocks)
    : n_(block_ambient), blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.ambient() != n_) throw std::invalid_argument("BlockSpace: block ambient mismatch");
    offsets_.push_back(dim_);
    dim_ += b.dim();
  }
}

std::pair<std::size_t, Vec> BlockSpace::basis_element(std::size_t k) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (k < offsets_[b] + blocks_[b].dim()) return {b, blocks_[b].vector(k - offsets_[b])};
  }
  throw std::out_of_range("BlockSpace::basis_element");
}

Vec BlockSpace::flat_basis_element(std::size_t k) const {
  auto [b, v] = basis_element(k);
  Vec flat(flat_size(), 0);
  std::copy(v.begin(), v.end(), flat.begin() + static_cast<std::ptrdiff_t>(b * n_));
  return flat;
}

bool BlockSpace::contains(const PrimeField& f, const Vec& flat) const {
  if (flat.size() != flat_size()) return false;
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (!blocks_[b].contains(f, block_of(flat, b, n_))) return false;
  return true;
}

Vec BlockSpace::coords(const Vec& flat) const {
  Vec c;
  c.reserve(dim_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    Vec cb = blocks_[b].coords(block_of(flat, b, n_));
    c.insert(c.end(), cb.begin(), cb.end());
  }
  return c;
}

Vec BlockSpace::from_coords(const PrimeField& f, const Vec& c) const {
  Vec flat(flat_size(), 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    Vec cb(c.begin() + static_cast<std::ptrdiff_t>(offsets_[b]),
           c.begin() + static_cast<std::ptrdiff_t>(offsets_[b] + blocks_[b].dim()));
    Vec v = blocks_[b].from_coords(f, cb);
    std::copy(v.begin(), v.end(), flat.begin() + static_cast<std::ptrdiff_t>(b * n_));
  }
  return flat;
}

Vec block_of(const Vec& flat, std::size_t b, std::size_t n) {
  return Vec(flat.begin() + static_cast<std::ptrdiff_t>(b * n),
             flat.begin() + static_cast<std::ptrdiff_t>((b + 1) * n));
}

void add_to_block(const PrimeField& f, Vec& flat, std::size_t b, std::size_t n, const Vec& v) {
  for (std::size_t i = 0; i < n; ++i) flat[b * n + i] = f.add(flat[b * n + i], v[i]);
}

}  // namespace pgalois
