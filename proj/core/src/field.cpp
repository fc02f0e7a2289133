#include "pgalois/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pgalois {

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("modulus too large: " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus not prime: " + std::to_string(p));
  }
  p_ = static_cast<Residue>(p);
}

bool PrimeField::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Residue PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  std::uint64_t base = a % p_;
  std::uint64_t acc = 1 % p_;
  while (e > 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(acc);
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

void PrimeField::axpy(Vec& v, Residue c, const Vec& w) const {
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w[i] != 0) v[i] = add(v[i], mul(c, w[i]));
  }
}

Vec PrimeField::scaled(const Vec& v, Residue c) const {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mul(v[i], c);
  return out;
}

Vec PrimeField::sum(const Vec& v, const Vec& w) const {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = add(v[i], w[i]);
  return out;
}

Vec PrimeField::diff(const Vec& v, const Vec& w) const {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = sub(v[i], w[i]);
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; });
}

}  // namespace pgalois
