#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgalois/comodule.hpp"
#include "pgalois/dual.hpp"

namespace pgalois {

/// q_embed(a) = sum_s u_s alpha_s(a e_{s^-1}); a bijection A -> Q.
DualElement q_embed(const PartialAction& pa, const Vec& a);
/// Tests c_(1) q(c_(2)) = q(c) x on the generators c = v_t.
bool q_member(const PartialAction& pa, const DualElement& q);

/// tau(b (x) a) = sum_s alpha_s(b a e_{s^-1}), with b in A and a in Q-as-A.
Vec morita_tau(const PartialAction& pa, const Vec& b, const Vec& a);
/// mu(a (x) b) = sum_s u_s alpha_s(a e_{s^-1}) b, with a in Q-as-A and b in A.
DualElement morita_mu(const PartialAction& pa, const Vec& a, const Vec& b);
/// a . (u_t a_t) = alpha_t(a e_{t^-1}) a_t.
Vec dual_act_on_algebra(const PartialAction& pa, const Vec& a, const DualElement& f);
/// (u_t a_t) . a = alpha_{t^-1}(a_t a e_t), on Q-as-A.
Vec dual_act_on_q(const PartialAction& pa, const DualElement& f, const Vec& a);

struct MoritaContext {
  Subalgebra invariants;
  DualRing dual;
  ValidationReport report;
};

/// Builds the context and checks it exhaustively on basis elements.
/// Conditions: "q_member" (i), "q_injective", "tau_in_T" (i, j),
/// "tau_functional" (i, j), "mu_functional" (i, j),
/// "right_action_functional" (i, k), "left_q_action_functional" (k, i),
/// "right_action_module" (i, k, l), "left_q_action_module" (k, l, i),
/// "compat_left" (i, j, k), "compat_right" (i, j, k), "tau_balanced" (i, k, j),
/// "mu_balanced" (i, t, j). Throws StructuralError for an invalid action.
MoritaContext morita_context(const PartialAction& pa);

/// Some a with sum_s alpha_s(a e_{s^-1}) = 1, or none.
std::optional<Vec> tau_surjectivity(const PartialAction& pa);
/// Whether the span of all tau values equals T.
bool tau_span_is_invariants(const PartialAction& pa);
bool mu_surjectivity(const PartialAction& pa);

struct StarCanVerdict {
  Matrix map;   // column k is the row-major endomorphism of basis element k of *C
  std::size_t dual_dim = 0;
  std::size_t end_dim = 0;
  bool injective = false;
  bool onto_end = false;
  bool bijective() const { return injective && onto_end; }
};

/// *can(u_t b)(a) = alpha_t(a e_{t^-1}) b into End_B(A). Throws
/// NotInvariantError if B is not inside the invariants.
StarCanVerdict star_can(const PartialAction& pa, const Subalgebra& sub);

struct ProgeneratorReport {
  bool projective = false;
  bool generator = false;
  std::size_t hom_dim = 0;     // dim Hom_B(M, B)
  std::size_t trace_dim = 0;   // dim of the trace ideal
  bool progenerator() const { return projective && generator; }
};

/// For a left module over balg, action indexed by the basis of balg.
ProgeneratorReport progenerator_check(const FiniteAlgebra& balg, const ModuleRep& mod);
/// A as a left B-module by multiplication.
ProgeneratorReport progenerator_check(const FiniteAlgebra& alg, const Subalgebra& sub);

struct Dashboard {
  bool can_bijective = false;        // (1a)
  bool progenerator = false;
  bool cond1 = false;                // (1a) and progenerator
  bool star_can_bijective = false;
  bool cond2 = false;                // *can bijective and progenerator
  bool base_is_invariants = false;
  bool tau_surjective = false;
  bool mu_surjective = false;
  bool cond3 = false;                // B = T, tau and mu surjective
  bool probes_bijective = false;
  bool cond4_probe = false;          // B = T and every probe bijective
  std::vector<std::string> inconsistencies;
  bool consistent() const { return inconsistencies.empty(); }
};

/// Evaluates each condition of the equivalence independently and records
/// every implication that fails.
Dashboard theorem_dashboard(const PartialAction& pa, const Subalgebra& sub);

}  // namespace pgalois
