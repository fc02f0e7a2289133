#pragma once

#include <string>
#include <vector>

#include "pgalois/partial_action.hpp"

namespace pgalois {

/// F_p^k with basis the primitive idempotents.
FiniteAlgebra split_algebra(const PrimeField& f, std::size_t k);

/// A = F_2, trivial group.
PartialAction fixture_triv();
/// A = F_2 x F_2, G = Z/2 acting globally by the swap.
PartialAction fixture_swap();
/// A = F_2 x F_2, G = Z/3, e_s = f2, e_{s^2} = f1, alpha_s(f1) = f2.
PartialAction fixture_shift();
/// A = F_2 x F_2, G = Z/2, e_g = 0.
PartialAction fixture_null();
/// A = F_2 x F_2, G = Z/2, e_g = 1, alpha_g = identity.
PartialAction fixture_trivact();

/// The cyclic shift on F_2^3 and the idempotent (1, 1, 0) whose restriction
/// is fixture_shift().
GlobalActionInstance shift_on_f2_cubed();
Vec shift_restriction_idempotent();

struct NamedFixture {
  std::string name;
  PartialAction action;
};

/// The five canonical fixtures in a fixed order.
std::vector<NamedFixture> canonical_fixtures();

}  // namespace pgalois
