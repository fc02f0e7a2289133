#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pgalois/algebra.hpp"
#include "pgalois/group.hpp"

namespace pgalois {

/// An idempotent partial action (e_s, alpha_s) of a finite group on A.
///
/// Each alpha_s is stored as a total n x n matrix L_s that kills the
/// complement of the domain ideal: L_s(a) = alpha_s(a * e_{s^-1}). The
/// genuine partial map A e_{s^-1} -> A e_s is its restriction.
struct PartialAction {
  FiniteAlgebra alg;
  FiniteGroup grp;
  std::vector<Vec> idem;      // e_s, indexed by group element
  std::vector<Matrix> maps;   // L_s

  const PrimeField& field() const { return alg.field(); }
  std::size_t order() const { return grp.order; }
  std::size_t dim() const { return alg.dim(); }
  const Vec& e(std::size_t s) const { return idem[s]; }

  /// alpha_s(a * e_{s^-1}).
  Vec alpha(std::size_t s, const Vec& a) const;
  /// Matrix of a -> alpha_s(a * e_{s^-1}).
  Matrix alpha_matrix(std::size_t s) const;
};

/// A global action of G on S by unital algebra automorphisms.
struct GlobalActionInstance {
  FiniteAlgebra amb;
  FiniteGroup grp;
  std::vector<Matrix> autos;
};

/// Checks every defining property of an idempotent partial action. Each
/// failure names the condition and carries a witness of group and basis
/// indices. Conditions: "central_idempotent" (s), "unit_idempotent",
/// "identity_map" (i), "kills_complement" (s, i), "image_in_ideal" (s, i),
/// "domain_unit" (s), "bijective" (s, rank), "multiplicative" (s, i, j),
/// "compatibility" (s, t, i). Malformed shapes throw StructuralError.
ValidationReport validate_partial_action(const PartialAction& pa);

/// Conditions: "unital" (s), "multiplicative" (s, i, j), "invertible" (s),
/// "identity" , "homomorphism" (s, t).
ValidationReport validate_global_action(const GlobalActionInstance& ga);

Vec alpha_apply(const PartialAction& pa, std::size_t s, const Vec& a);

/// T = A^G = { a : alpha_s(a e_{s^-1}) = a e_s for every s }. Closure under
/// multiplication is checked, not assumed; a failure throws std::logic_error.
Subalgebra invariants(const PartialAction& pa);

/// Returns the first element of `sub` moved by the action, as
/// (basis index, group element), if any.
std::optional<std::pair<std::size_t, std::size_t>> first_moved(const PartialAction& pa, const Subalgebra& sub);

struct Restriction {
  Subspace ideal;          // S*e inside S; its reduced basis is the basis of A
  PartialAction action;
};

/// Restricts a global action along a nonzero central idempotent e of S:
/// A = S e, e_s = e * beta_s(e), alpha_s(x) = beta_s(x) e_s.
/// Throws StructuralError for invalid input, e = 0, or e not a central
/// idempotent.
Restriction restrict_global_action(const GlobalActionInstance& ga, const Vec& e);

/// Idempotent blocks A e_s, in group order.
BlockSpace idempotent_blocks(const PartialAction& pa);

struct SkewGroupRing {
  FiniteAlgebra algebra;
  BlockSpace blocks;   // basis element k is (a_s u_s) for the k-th block vector
};

/// The partial skew group ring, with (a u_s)(b u_t) = alpha_s(alpha_{s^-1}(a) b) u_{st}.
/// Requires A commutative; throws StructuralError otherwise.
SkewGroupRing skew_group_ring(const PartialAction& pa);

}  // namespace pgalois
