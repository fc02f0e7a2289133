#pragma once

#include <vector>

#include "pgalois/coring.hpp"
#include "pgalois/module.hpp"

namespace pgalois {

/// A partial Galois descent datum on a right A-module M. maps[s] is the
/// extended R_s(m) = rho_s(m e_{s^-1}) as a d x d matrix.
struct DescentDatum {
  ModuleRep mod;
  std::vector<Matrix> maps;
};

/// Conditions: "module.*" from validate_module; "identity";
/// "linearity" (s, m, i); "kills_complement" (s, m); "image_in_part" (s, m);
/// "bijective" (s, rank); "compatibility" (s, t, m). Here m and i are basis
/// indices of M and A. Shape mismatches throw StructuralError.
ValidationReport validate_descent_datum(const PartialAction& pa, const DescentDatum& dd);

/// A right coaction M -> M (x)_A C, stored through the isomorphism
/// M (x)_A C = (+)_s M e_s: blocks[s] is the d x d matrix of the v_s part.
struct Coaction {
  std::vector<Matrix> blocks;
};

Coaction datum_to_coaction(const PartialAction& pa, const DescentDatum& dd);
/// rho_s = (M (x) u_s) o rho. Throws StructuralError if the result is not a
/// valid datum.
DescentDatum coaction_to_datum(const PartialAction& pa, const ModuleRep& mod, const Coaction& rho);

/// Conditions: "canonical_form" (s, m), "right_linear" (s, m, i),
/// "coassociativity" (s, t, m), "counit" (m).
ValidationReport check_coaction(const PartialAction& pa, const ModuleRep& mod, const Coaction& rho);

/// M^G = { m : R_s(m) = m e_s for every s }.
Subspace coinvariants(const PartialAction& pa, const DescentDatum& dd);

/// M = A with R_s = alpha_s; the comodule of the grouplike coaction.
DescentDatum regular_datum(const PartialAction& pa);

/// C over itself, with the right action of A and rho = Delta, in the
/// coordinates of Coring::blocks().
DescentDatum coring_datum(const PartialAction& pa);

/// F(N) = N (x)_B A for a right B-module N whose action is indexed by the
/// basis of B, with R_s(n (x) a) = n (x) alpha_s(a). Throws
/// NotInvariantError if B is not inside the invariants.
DescentDatum induce_comodule(const PartialAction& pa, const Subalgebra& sub, const ModuleRep& n_mod);

struct ProbeMap {
  Matrix map;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool bijective = false;
};

/// nu_N : N -> F(N)^G, n |-> n (x) 1, in coinvariant coordinates.
ProbeMap unit_probe(const PartialAction& pa, const Subalgebra& sub, const ModuleRep& n_mod);
/// zeta_M : M^G (x)_B A -> M, m (x) a |-> m a.
ProbeMap counit_probe(const PartialAction& pa, const Subalgebra& sub, const DescentDatum& dd);

struct AdjunctionProbe {
  ProbeMap nu;
  ProbeMap zeta;
  bool bijective() const { return nu.bijective && zeta.bijective; }
};

AdjunctionProbe adjunction_probe(const PartialAction& pa, const Subalgebra& sub, const ModuleRep& n_mod,
                                 const DescentDatum& dd);

/// The fixed probe sets: N in {B, B^2, A} and M in {A, C, F(B^2)}.
std::vector<ModuleRep> probe_modules(const PartialAction& pa, const Subalgebra& sub);
std::vector<DescentDatum> probe_comodules(const PartialAction& pa, const Subalgebra& sub);

}  // namespace pgalois
