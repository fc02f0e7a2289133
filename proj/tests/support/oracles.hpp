#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "pgalois/fixtures.hpp"
#include "pgalois/generators.hpp"
#include "pgalois/partial_action.hpp"

namespace pgalois::testing {

inline Vec f1() { return {1, 0}; }
inline Vec f2() { return {0, 1}; }

/// Every vector of F_p^n, in lexicographic order.
inline void for_each_vector(std::uint64_t p, std::size_t n, const std::function<void(const Vec&)>& visit) {
  Vec v(n, 0);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) return;
  }
}

inline std::uint64_t space_size(std::uint64_t p, std::size_t n) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n; ++i) s *= p;
  return s;
}

/// Full matrix algebra M_k(F_p) on the matrix units, E_ij at index i*k + j.
inline FiniteAlgebra matrix_algebra(const PrimeField& f, std::size_t k) {
  Vec unit(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) unit[i * k + i] = 1;
  return FiniteAlgebra::from_products(
      f, k * k,
      [k](std::size_t a, std::size_t b) {
        Vec v(k * k, 0);
        if (a % k == b / k) v[(a / k) * k + b % k] = 1;
        return v;
      },
      unit);
}

/// Elements a with alpha_s(a e_{s^-1}) = a e_s for every s, by enumeration.
inline std::size_t brute_invariant_count(const PartialAction& pa) {
  std::size_t count = 0;
  for_each_vector(pa.field().modulus(), pa.dim(), [&](const Vec& a) {
    for (std::size_t s = 0; s < pa.order(); ++s)
      if (pa.alpha(s, a) != pa.alg.multiply(a, pa.e(s))) return;
    ++count;
  });
  return count;
}

/// Some a with sum_s alpha_s(a e_{s^-1}) = 1, by enumeration.
inline std::optional<Vec> brute_tau_witness(const PartialAction& pa) {
  std::optional<Vec> found;
  const PrimeField& f = pa.field();
  for_each_vector(f.modulus(), pa.dim(), [&](const Vec& a) {
    if (found) return;
    Vec sum = pa.alg.zero();
    for (std::size_t s = 0; s < pa.order(); ++s) sum = f.sum(sum, pa.alpha(s, a));
    if (sum == pa.alg.unit()) found = a;
  });
  return found;
}

/// The shared random corpus: instance k of a run is drawn from seed + k.
inline RandomInstance corpus_instance(std::uint64_t seed, std::size_t k) {
  std::mt19937_64 rng(seed * 1000003u + k);
  return random_restricted_action(rng);
}

inline Mutation corpus_mutation(std::uint64_t seed, std::size_t k) {
  std::mt19937_64 rng(seed * 1000033u + k);
  return random_mutation(rng);
}

}  // namespace pgalois::testing
