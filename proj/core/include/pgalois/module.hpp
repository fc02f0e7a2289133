#pragma once

#include <vector>

#include "pgalois/algebra.hpp"

namespace pgalois {

enum class Side { left, right };

/// A finite-dimensional module over a FiniteAlgebra. act[i] is the matrix of
/// the action of basis element b_i on column vectors, whichever side the
/// module is on.
struct ModuleRep {
  std::size_t dim = 0;
  Side side = Side::right;
  std::vector<Matrix> act;
};

/// Matrix of the action of an arbitrary algebra element.
Matrix action_of(const FiniteAlgebra& alg, const ModuleRep& mod, const Vec& x);

/// Failures: "unit_action", "action_relation" (witness i, j).
ValidationReport validate_module(const FiniteAlgebra& alg, const ModuleRep& mod);

ModuleRep regular_module(const FiniteAlgebra& alg, Side side);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

/// A viewed as a module over one of its subalgebras, by multiplication on
/// the given side. The action is indexed by the subalgebra's basis.
ModuleRep restrict_to_subalgebra(const FiniteAlgebra& alg, const Subalgebra& sub, Side side);

/// The submodule M*e of a right module (or e*M of a left one).
Subspace module_part(const FiniteAlgebra& alg, const ModuleRep& mod, const Vec& e);

}  // namespace pgalois
