#include "pgalois/module.hpp"

namespace pgalois {

Matrix action_of(const FiniteAlgebra& alg, const ModuleRep& mod, const Vec& x) {
  const PrimeField& f = alg.field();
  Matrix m(mod.dim, mod.dim);
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (x[i] != 0) m = mat_add(f, m, mat_scale(f, mod.act[i], x[i]));
  return m;
}

ValidationReport validate_module(const FiniteAlgebra& alg, const ModuleRep& mod) {
  ValidationReport rep;
  if (mod.act.size() != alg.dim()) throw StructuralError("module: one action matrix per basis element required");
  for (const auto& a : mod.act)
    if (a.rows() != mod.dim || a.cols() != mod.dim) throw StructuralError("module: action matrix has wrong shape");
  const PrimeField& f = alg.field();
  if (action_of(alg, mod, alg.unit()) != Matrix::identity(mod.dim)) rep.fail("unit_action", {});
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Matrix composed = mod.side == Side::left ? mat_mul(f, mod.act[i], mod.act[j])
                                               : mat_mul(f, mod.act[j], mod.act[i]);
      if (composed != action_of(alg, mod, alg.product(i, j))) {
        rep.fail("action_relation", {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
        return rep;
      }
    }
  return rep;
}

ModuleRep regular_module(const FiniteAlgebra& alg, Side side) {
  ModuleRep m{alg.dim(), side, {}};
  for (std::size_t i = 0; i < alg.dim(); ++i)
    m.act.push_back(side == Side::left ? alg.left_mult(alg.basis(i)) : alg.right_mult(alg.basis(i)));
  return m;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  if (a.side != b.side || a.act.size() != b.act.size())
    throw StructuralError("direct_sum: modules over different algebras or sides");
  ModuleRep m{a.dim + b.dim, a.side, {}};
  for (std::size_t i = 0; i < a.act.size(); ++i) m.act.push_back(block_diagonal({a.act[i], b.act[i]}));
  return m;
}

ModuleRep restrict_to_subalgebra(const FiniteAlgebra& alg, const Subalgebra& sub, Side side) {
  ModuleRep m{alg.dim(), side, {}};
  for (std::size_t i = 0; i < sub.dim(); ++i)
    m.act.push_back(side == Side::left ? alg.left_mult(sub.element(i)) : alg.right_mult(sub.element(i)));
  return m;
}

Subspace module_part(const FiniteAlgebra& alg, const ModuleRep& mod, const Vec& e) {
  return Subspace(alg.field(), action_of(alg, mod, e).transpose());
}

}  // namespace pgalois
