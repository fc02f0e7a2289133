#include "pgalois/comodule.hpp"

#include <string>

namespace pgalois {

namespace {

using W = std::vector<std::int64_t>;

std::int64_t ix(std::size_t v) { return static_cast<std::int64_t>(v); }

void fail_once(ValidationReport& rep, const std::string& condition, W witness) {
  if (!rep.has(condition)) rep.fail(condition, std::move(witness));
}

// First column where two equally shaped matrices differ.
std::optional<std::size_t> first_column_diff(const Matrix& a, const Matrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.column(j) != b.column(j)) return j;
  return std::nullopt;
}

Vec unit_vector(std::size_t d, std::size_t i) {
  Vec v(d, 0);
  v[i] = 1;
  return v;
}

Vec kron_vec(const PrimeField& f, const Vec& x, const Vec& y) {
  Vec out(x.size() * y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = f.mul(x[i], y[j]);
  return out;
}

void check_shapes(const PartialAction& pa, const ModuleRep& mod, const std::vector<Matrix>& maps) {
  if (mod.side != Side::right) throw StructuralError("descent data live on right modules");
  if (mod.act.size() != pa.dim()) throw StructuralError("module: one action matrix per algebra basis element required");
  if (maps.size() != pa.order()) throw StructuralError("descent datum: one map per group element required");
  for (const auto& m : maps)
    if (m.rows() != mod.dim || m.cols() != mod.dim) throw StructuralError("descent datum: map has wrong shape");
}

// X (x)_B A for a right B-module X of dimension r given by its action
// matrices (indexed by the basis of B). Ambient index i*n + k is x_i (x) b_k.
QuotientSpace tensor_with_algebra(const FiniteAlgebra& alg, const Subalgebra& sub, const std::vector<Matrix>& b_act,
                                  std::size_t r) {
  const PrimeField& f = alg.field();
  const std::size_t n = alg.dim();
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < sub.dim(); ++j) {
    Vec beta = sub.element(j);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < n; ++k)
        rows.push_back(f.diff(kron_vec(f, b_act[j].column(i), alg.basis(k)),
                              kron_vec(f, unit_vector(r, i), alg.multiply(beta, alg.basis(k)))));
  }
  return build_quotient(f, r * n, Matrix::from_rows(rows, r * n));
}

struct Induced {
  QuotientSpace space;
  DescentDatum datum;
};

Induced induce(const PartialAction& pa, const Subalgebra& sub, const ModuleRep& n_mod) {
  if (auto moved = first_moved(pa, sub)) throw NotInvariantError(moved->first, moved->second);
  if (n_mod.side != Side::right) throw StructuralError("induce_comodule: N must be a right B-module");
  FiniteAlgebra balg = subalgebra_as_algebra(pa.alg, sub);
  ValidationReport rep = validate_module(balg, n_mod);
  if (!rep.ok()) throw StructuralError("induce_comodule: invalid B-module: " + rep.summary());

  const FiniteAlgebra& A = pa.alg;
  const PrimeField& f = A.field();
  QuotientSpace q = tensor_with_algebra(A, sub, n_mod.act, n_mod.dim);
  Matrix id = Matrix::identity(n_mod.dim);
  auto descend = [&](const Matrix& on_a) {
    return mat_mul(f, mat_mul(f, q.projection, kronecker(f, id, on_a)), q.section);
  };
  DescentDatum dd{ModuleRep{q.dim, Side::right, {}}, {}};
  for (std::size_t i = 0; i < A.dim(); ++i) dd.mod.act.push_back(descend(A.right_mult(A.basis(i))));
  for (std::size_t s = 0; s < pa.order(); ++s) dd.maps.push_back(descend(pa.alpha_matrix(s)));
  return Induced{std::move(q), std::move(dd)};
}

bool kills(const PrimeField& f, const Matrix& map, const Matrix& relations) {
  for (std::size_t r = 0; r < relations.rows(); ++r)
    if (!is_zero(mat_vec(f, map, relations.row_vec(r)))) return false;
  return true;
}

ProbeMap finish_probe(const PrimeField& f, Matrix map, std::size_t source, std::size_t target) {
  ProbeMap p;
  p.source_dim = source;
  p.target_dim = target;
  p.bijective = source == target && rank(f, map) == target;
  p.map = std::move(map);
  return p;
}

}  // namespace

ValidationReport validate_descent_datum(const PartialAction& pa, const DescentDatum& dd) {
  check_shapes(pa, dd.mod, dd.maps);
  const FiniteAlgebra& A = pa.alg;
  const PrimeField& f = A.field();
  const FiniteGroup& G = pa.grp;
  const std::size_t d = dd.mod.dim;
  ValidationReport rep;
  rep.merge(validate_module(A, dd.mod), "module.");
  if (!rep.ok()) return rep;

  if (dd.maps[G.id] != Matrix::identity(d)) rep.fail("identity", {});
  std::vector<Matrix> part(pa.order());
  for (std::size_t s = 0; s < pa.order(); ++s) part[s] = action_of(A, dd.mod, pa.e(s));

  for (std::size_t s = 0; s < pa.order(); ++s) {
    const Matrix& R = dd.maps[s];
    const std::size_t si = G.inverse(s);
    if (auto m = first_column_diff(R, mat_mul(f, R, part[si]))) fail_once(rep, "kills_complement", {ix(s), ix(*m)});
    if (auto m = first_column_diff(mat_mul(f, part[s], R), R)) fail_once(rep, "image_in_part", {ix(s), ix(*m)});
    for (std::size_t i = 0; i < A.dim(); ++i) {
      Matrix lhs = mat_mul(f, R, dd.mod.act[i]);
      Matrix rhs = mat_mul(f, action_of(A, dd.mod, pa.alpha(s, A.basis(i))), R);
      if (auto m = first_column_diff(lhs, rhs)) fail_once(rep, "linearity", {ix(s), ix(*m), ix(i)});
    }
    Subspace dom = module_part(A, dd.mod, pa.e(si));
    Subspace cod = module_part(A, dd.mod, pa.e(s));
    std::size_t r = dom.dim() == 0 ? 0 : rank(f, mat_mul(f, R, dom.basis().transpose()));
    if (r != dom.dim() || r != cod.dim()) fail_once(rep, "bijective", {ix(s), ix(r)});
  }

  for (std::size_t s = 0; s < pa.order(); ++s)
    for (std::size_t t = 0; t < pa.order(); ++t) {
      Matrix lhs = mat_mul(f, dd.maps[t], dd.maps[s]);
      Matrix rhs = mat_mul(f, part[t], dd.maps[G.mul(t, s)]);
      if (auto m = first_column_diff(lhs, rhs)) fail_once(rep, "compatibility", {ix(s), ix(t), ix(*m)});
    }
  return rep;
}

Coaction datum_to_coaction(const PartialAction& pa, const DescentDatum& dd) {
  ValidationReport rep = validate_descent_datum(pa, dd);
  if (!rep.ok()) throw StructuralError("invalid descent datum: " + rep.summary());
  return Coaction{dd.maps};
}

DescentDatum coaction_to_datum(const PartialAction& pa, const ModuleRep& mod, const Coaction& rho) {
  check_shapes(pa, mod, rho.blocks);
  DescentDatum dd{mod, {}};
  for (std::size_t s = 0; s < pa.order(); ++s)
    dd.maps.push_back(mat_mul(pa.field(), action_of(pa.alg, mod, pa.e(s)), rho.blocks[s]));
  ValidationReport rep = validate_descent_datum(pa, dd);
  if (!rep.ok()) throw StructuralError("coaction does not give a descent datum: " + rep.summary());
  return dd;
}

ValidationReport check_coaction(const PartialAction& pa, const ModuleRep& mod, const Coaction& rho) {
  check_shapes(pa, mod, rho.blocks);
  const FiniteAlgebra& A = pa.alg;
  const PrimeField& f = A.field();
  const FiniteGroup& G = pa.grp;
  ValidationReport rep;
  rep.merge(validate_module(A, mod), "module.");
  if (!rep.ok()) return rep;

  for (std::size_t s = 0; s < pa.order(); ++s) {
    const Matrix& B = rho.blocks[s];
    if (auto m = first_column_diff(mat_mul(f, action_of(A, mod, pa.e(s)), B), B))
      fail_once(rep, "canonical_form", {ix(s), ix(*m)});
    for (std::size_t i = 0; i < A.dim(); ++i) {
      Matrix lhs = mat_mul(f, B, mod.act[i]);
      Matrix rhs = mat_mul(f, action_of(A, mod, pa.alpha(s, A.basis(i))), B);
      if (auto m = first_column_diff(lhs, rhs)) fail_once(rep, "right_linear", {ix(s), ix(*m), ix(i)});
    }
  }
  for (std::size_t s = 0; s < pa.order(); ++s)
    for (std::size_t t = 0; t < pa.order(); ++t) {
      const std::size_t st = G.mul(s, t);
      Matrix trunc = action_of(A, mod, A.multiply(pa.e(s), pa.e(st)));
      Matrix lhs = mat_mul(f, trunc, mat_mul(f, rho.blocks[s], rho.blocks[t]));
      Matrix rhs = mat_mul(f, trunc, rho.blocks[st]);
      if (auto m = first_column_diff(lhs, rhs)) fail_once(rep, "coassociativity", {ix(s), ix(t), ix(*m)});
    }
  if (auto m = first_column_diff(rho.blocks[G.id], Matrix::identity(mod.dim))) fail_once(rep, "counit", {ix(*m)});
  return rep;
}

Subspace coinvariants(const PartialAction& pa, const DescentDatum& dd) {
  check_shapes(pa, dd.mod, dd.maps);
  const PrimeField& f = pa.field();
  std::vector<Matrix> conditions;
  for (std::size_t s = 0; s < pa.order(); ++s)
    conditions.push_back(mat_sub(f, dd.maps[s], action_of(pa.alg, dd.mod, pa.e(s))));
  if (dd.mod.dim == 0) return Subspace(f, Matrix(0, 0));
  return Subspace(f, kernel(f, vstack(conditions)));
}

DescentDatum regular_datum(const PartialAction& pa) {
  DescentDatum dd{regular_module(pa.alg, Side::right), {}};
  for (std::size_t s = 0; s < pa.order(); ++s) dd.maps.push_back(pa.alpha_matrix(s));
  return dd;
}

DescentDatum coring_datum(const PartialAction& pa) {
  Coring C(pa);
  const FiniteAlgebra& A = pa.alg;
  const std::size_t d = C.dim();
  DescentDatum dd{ModuleRep{d, Side::right, {}}, {}};
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Matrix act(d, d);
    for (std::size_t k = 0; k < d; ++k) act.set_column(k, C.coords(C.right_act(C.basis_element(k), A.basis(i))));
    dd.mod.act.push_back(std::move(act));
  }
  for (std::size_t s = 0; s < pa.order(); ++s) {
    Matrix R(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      TensorPower dx = C.comultiply(C.basis_element(k));
      CoringElement part = C.zero();
      for (std::size_t t = 0; t < pa.order(); ++t)
        add_to_block(C.field(), part.comps, t, C.n(), block_of(dx.comps, C.word_index({t, s}), C.n()));
      R.set_column(k, C.coords(C.right_act(C.normalize(part), pa.e(s))));
    }
    dd.maps.push_back(std::move(R));
  }
  return dd;
}

DescentDatum induce_comodule(const PartialAction& pa, const Subalgebra& sub, const ModuleRep& n_mod) {
  return induce(pa, sub, n_mod).datum;
}

ProbeMap unit_probe(const PartialAction& pa, const Subalgebra& sub, const ModuleRep& n_mod) {
  const PrimeField& f = pa.field();
  Induced fn = induce(pa, sub, n_mod);
  Subspace inv = coinvariants(pa, fn.datum);
  Matrix map(inv.dim(), n_mod.dim);
  for (std::size_t i = 0; i < n_mod.dim; ++i) {
    Vec v = fn.space.project(f, kron_vec(f, unit_vector(n_mod.dim, i), pa.alg.unit()));
    if (!inv.contains(f, v)) throw std::logic_error("n (x) 1 is not coinvariant");
    map.set_column(i, inv.coords(v));
  }
  return finish_probe(f, std::move(map), n_mod.dim, inv.dim());
}

ProbeMap counit_probe(const PartialAction& pa, const Subalgebra& sub, const DescentDatum& dd) {
  if (auto moved = first_moved(pa, sub)) throw NotInvariantError(moved->first, moved->second);
  const FiniteAlgebra& A = pa.alg;
  const PrimeField& f = A.field();
  const std::size_t n = A.dim();
  Subspace inv = coinvariants(pa, dd);
  const std::size_t r = inv.dim();

  std::vector<Matrix> b_act;
  for (std::size_t j = 0; j < sub.dim(); ++j) {
    Matrix act = action_of(A, dd.mod, sub.element(j));
    Matrix on_inv(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      Vec w = mat_vec(f, act, inv.vector(i));
      if (!inv.contains(f, w)) throw std::logic_error("coinvariants are not a B-submodule");
      on_inv.set_column(i, inv.coords(w));
    }
    b_act.push_back(std::move(on_inv));
  }
  QuotientSpace q = tensor_with_algebra(A, sub, b_act, r);
  Matrix raw(dd.mod.dim, r * n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) raw.set_column(i * n + k, mat_vec(f, dd.mod.act[k], inv.vector(i)));
  if (!kills(f, raw, q.relations)) throw std::logic_error("multiplication map is not B-balanced");
  return finish_probe(f, mat_mul(f, raw, q.section), q.dim, dd.mod.dim);
}

AdjunctionProbe adjunction_probe(const PartialAction& pa, const Subalgebra& sub, const ModuleRep& n_mod,
                                 const DescentDatum& dd) {
  return AdjunctionProbe{unit_probe(pa, sub, n_mod), counit_probe(pa, sub, dd)};
}

std::vector<ModuleRep> probe_modules(const PartialAction& pa, const Subalgebra& sub) {
  ModuleRep b = regular_module(subalgebra_as_algebra(pa.alg, sub), Side::right);
  return {b, direct_sum(b, b), restrict_to_subalgebra(pa.alg, sub, Side::right)};
}

std::vector<DescentDatum> probe_comodules(const PartialAction& pa, const Subalgebra& sub) {
  ModuleRep b = regular_module(subalgebra_as_algebra(pa.alg, sub), Side::right);
  return {regular_datum(pa), coring_datum(pa), induce_comodule(pa, sub, direct_sum(b, b))};
}

}  // namespace pgalois
