#pragma once

#include <vector>

#include "pgalois/coring.hpp"

namespace pgalois {

/// Element sum_s u_s a_s of *C = (+)_s u_s A e_s, stored flat like a
/// CoringElement. As a functional it sends sum_r c_r v_r to sum_s c_s e_s a_s.
struct DualElement {
  Vec comps;
  friend bool operator==(const DualElement&, const DualElement&) = default;
};

DualElement dual_zero(const PartialAction& pa);
/// u_s a, canonicalized.
DualElement dual_basic(const PartialAction& pa, std::size_t s, const Vec& a);
DualElement dual_normalize(const PartialAction& pa, DualElement x);
DualElement dual_add(const PartialAction& pa, const DualElement& x, const DualElement& y);
/// j(a) = u_1 a.
DualElement j_embed(const PartialAction& pa, const Vec& a);

/// (u_t b) # (u_s a) = u_{st} alpha_s(b e_{s^-1}) a.
DualElement dual_multiply(const PartialAction& pa, const DualElement& x, const DualElement& y);

/// Evaluates x on a coring element.
Vec evaluate(const Coring& c, const DualElement& x, const CoringElement& y);
/// (x # y)(c) = y(c_(1) x(c_(2))), computed from the coring structure.
DualElement compose_functionals(const Coring& c, const DualElement& x, const DualElement& y);

struct DualRing {
  FiniteAlgebra algebra;
  BlockSpace blocks;   // basis element k is u_s a for the k-th block vector a of A e_s

  Vec coords(const DualElement& x) const { return blocks.coords(x.comps); }
  DualElement element(const PrimeField& f, const Vec& coords) const { return {blocks.from_coords(f, coords)}; }
  DualElement basis_element(std::size_t k) const { return {blocks.flat_basis_element(k)}; }
};

/// Builds *C. Throws StructuralError for an invalid action.
DualRing dual_ring(const PartialAction& pa);

/// Conditions: "algebra.*" (associativity and unit of *C), "composition"
/// (k, l) against the functional composition, "left_action" (i, s) for
/// j(b_i) # u_s, "j_unital", "j_multiplicative" (i, j).
ValidationReport check_dual_ring(const PartialAction& pa);

/// Checks that u_s a |-> a u_s is a unital anti-isomorphism *C -> A *_alpha G.
/// Conditions: "dimension", "unit", "anti_multiplicative" (k, l).
/// Throws StructuralError when A is not commutative.
ValidationReport dual_vs_skew(const PartialAction& pa);

/// Element of *C (x)_A *C as coefficients on u_s (x) u_t, index s*g + t.
/// The canonical coefficient at (s, t) lies in A e_t e_{ts}.
struct DualTensor {
  Vec comps;
  friend bool operator==(const DualTensor&, const DualTensor&) = default;
};

DualTensor dual_tensor_zero(const PartialAction& pa);
/// d * (u_s (x) u_t), canonicalized.
DualTensor dual_tensor_basic(const PartialAction& pa, std::size_t s, std::size_t t, const Vec& d);
DualTensor dual_tensor(const PartialAction& pa, const DualElement& x, const DualElement& y);
DualTensor dual_tensor_add(const PartialAction& pa, const DualTensor& x, const DualTensor& y);
DualTensor left_multiply(const PartialAction& pa, const DualElement& r, const DualTensor& t);
DualTensor right_multiply(const PartialAction& pa, const DualTensor& t, const DualElement& r);

/// e = sum_s u_{s^-1} (x) u_s.
DualTensor casimir(const PartialAction& pa);
/// nu(sum_s u_s a_s) = a_1.
Vec nu_bar(const PartialAction& pa, const DualElement& x);
/// nu(e^1) e^2 and e^1 nu(e^2).
DualElement contract_left(const PartialAction& pa, const DualTensor& t);
DualElement contract_right(const PartialAction& pa, const DualTensor& t);

/// The generators j(b_i), then u_s e_s for every s.
std::vector<DualElement> dual_generators(const PartialAction& pa);

/// Conditions: "casimir_left", "casimir_right", "central" (generator index),
/// "nu_left_linear" (i, k), "nu_right_linear" (i, k).
ValidationReport frobenius_check(const PartialAction& pa);

}  // namespace pgalois
