#pragma once

#include <stdexcept>
#include <vector>

#include "pgalois/partial_action.hpp"
#include "pgalois/quotient.hpp"

namespace pgalois {

/// Element sum_s c_s v_s of C = (+)_s A e_s v_s, stored flat (block s holds
/// c_s). Canonical form has c_s in A e_s.
struct CoringElement {
  Vec comps;
  friend bool operator==(const CoringElement&, const CoringElement&) = default;
};

/// Element of the k-fold tensor power of C over A, as coefficients on the
/// basic tensors v_{s1} (x) ... (x) v_{sk}. Word (s1, ..., sk) has index
/// s1*g^(k-1) + ... + sk. Canonical coefficients at a word lie in
/// A e_{s1} e_{s1 s2} ... e_{s1...sk}.
struct TensorPower {
  std::size_t degree = 0;
  Vec comps;
  friend bool operator==(const TensorPower&, const TensorPower&) = default;
};

/// The coring attached to a partial action. Construction does not validate
/// the action, so that check_coring_axioms can be run on broken inputs;
/// use build_coring for the checked path.
class Coring {
 public:
  explicit Coring(PartialAction pa);

  const PartialAction& action() const { return pa_; }
  const FiniteAlgebra& algebra() const { return pa_.alg; }
  const PrimeField& field() const { return pa_.field(); }
  std::size_t order() const { return pa_.order(); }
  std::size_t n() const { return pa_.dim(); }
  /// The canonical basis: block s is a reduced basis of A e_s.
  const BlockSpace& blocks() const { return blocks_; }
  std::size_t dim() const { return blocks_.dim(); }

  CoringElement zero() const { return {Vec(order() * n(), 0)}; }
  /// a v_s, canonicalized.
  CoringElement element(std::size_t s, const Vec& a) const;
  CoringElement basis_element(std::size_t k) const;
  CoringElement normalize(CoringElement c) const;
  Vec coords(const CoringElement& c) const { return blocks_.coords(c.comps); }

  CoringElement add(const CoringElement& x, const CoringElement& y) const;
  CoringElement left_act(const Vec& a, const CoringElement& c) const;
  CoringElement right_act(const CoringElement& c, const Vec& a) const;

  TensorPower zero_tensor(std::size_t degree) const;
  std::size_t word_count(std::size_t degree) const;
  std::vector<std::size_t> word(std::size_t index, std::size_t degree) const;
  std::size_t word_index(const std::vector<std::size_t>& word) const;
  Vec word_idempotent(const std::vector<std::size_t>& word) const;
  TensorPower normalize(TensorPower t) const;
  /// d * (v_{s1} (x) ... (x) v_{sk}), canonicalized.
  TensorPower basic(const std::vector<std::size_t>& word, const Vec& d) const;
  TensorPower add(const TensorPower& x, const TensorPower& y) const;
  TensorPower right_act(const TensorPower& t, const Vec& a) const;
  /// x (x)_A y, moving every coefficient of y to the far left.
  TensorPower tensor(const TensorPower& x, const TensorPower& y) const;
  TensorPower as_tensor(const CoringElement& c) const;

  TensorPower comultiply(const CoringElement& c) const;
  Vec counit(const CoringElement& c) const;
  /// (Delta (x) C) and (C (x) Delta) on the second tensor power.
  TensorPower delta_left(const TensorPower& t) const;
  TensorPower delta_right(const TensorPower& t) const;
  /// (C (x) eps) and (eps (x) C) on the second tensor power.
  CoringElement counit_right(const TensorPower& t) const;
  CoringElement counit_left(const TensorPower& t) const;

 private:
  PartialAction pa_;
  BlockSpace blocks_;
};

/// Validates the action and builds its coring. Throws StructuralError with
/// the validation summary if the action is invalid.
Coring build_coring(const PartialAction& pa);

CoringElement right_act(const Coring& c, const CoringElement& x, const Vec& a);
TensorPower comultiply(const Coring& c, const CoringElement& x);
Vec counit(const Coring& c, const CoringElement& x);

/// Exact check, on every canonical basis element a v_s, of coassociativity,
/// both counit laws, right A-linearity of Delta and eps against every
/// algebra basis element, and the bimodule laws of the right action.
/// Conditions: "coassociativity", "left_counit", "right_counit" (s, k);
/// "delta_right_linear", "counit_right_linear" (s, k, i);
/// "right_action_unital" (s, k); "right_action_associative" (s, k, i, j).
/// Here k indexes the basis of A e_s and i, j index the basis of A.
ValidationReport check_coring_axioms(const Coring& c);

/// x = sum_s v_s. Throws std::logic_error if Delta(x) != x (x) x or
/// eps(x) != 1.
CoringElement grouplike(const Coring& c);
/// The coaction rho(a) = x a = sum_s alpha_s(a e_{s^-1}) v_s.
CoringElement grouplike_coaction(const Coring& c, const Vec& a);

/// D = A (x)_B A with Delta_D(a (x) a') = a (x) 1 (x) a' and eps_D the
/// multiplication map.
struct SweedlerCoring {
  QuotientSpace pair;     // quotient of F_p^(n^2); index i*n + j for b_i (x) b_j
  QuotientSpace triple;   // quotient of F_p^(n^3)
  Matrix delta;           // triple.dim x pair.dim
  Matrix counit;          // n x pair.dim
};

/// Relations a b (x) a' - a (x) b a' spanning the kernel of A (x) A -> A (x)_B A.
Matrix balanced_relations(const FiniteAlgebra& alg, const Subalgebra& sub);
SweedlerCoring sweedler_coring(const FiniteAlgebra& alg, const Subalgebra& sub);

/// Raised when a proposed base ring is not contained in the invariants.
class NotInvariantError : public std::invalid_argument {
 public:
  NotInvariantError(std::size_t basis_index, std::size_t group_element);
  std::size_t basis_index;
  std::size_t group_element;
};

struct GaloisVerdict {
  Matrix can_matrix;   // C coordinates x (A (x)_B A) quotient coordinates
  bool bijective = false;
  bool coring_morphism_ok = false;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
};

/// can(a (x) b) = sum_s a alpha_s(b e_{s^-1}) v_s on A (x)_B A, together
/// with a check that it is a morphism of corings. Throws NotInvariantError
/// if some basis element of B is moved by the action.
GaloisVerdict canonical_map(const PartialAction& pa, const Subalgebra& sub);

bool is_partial_galois(const PartialAction& pa);

}  // namespace pgalois
