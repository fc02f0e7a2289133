#pragma once

#include <cstdint>
#include <vector>

namespace pgalois {

using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

/// Arithmetic in Z/pZ for a prime p < 2^31.
///
/// Residues are always stored reduced to [0, p). Construction rejects
/// composite moduli, so every nonzero residue is invertible.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  static bool is_prime(std::uint64_t n);

  Residue modulus() const { return p_; }

  Residue reduce(std::int64_t v) const;
  Residue add(Residue a, Residue b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((std::uint64_t{a} * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  Residue inv(Residue a) const;

  // v += c * w, componentwise.
  void axpy(Vec& v, Residue c, const Vec& w) const;
  Vec scaled(const Vec& v, Residue c) const;
  Vec sum(const Vec& v, const Vec& w) const;
  Vec diff(const Vec& v, const Vec& w) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

bool is_zero(const Vec& v);

}  // namespace pgalois
