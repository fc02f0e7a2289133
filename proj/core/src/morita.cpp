#include "pgalois/morita.hpp"

namespace pgalois {

namespace {

using W = std::vector<std::int64_t>;

std::int64_t ix(std::size_t v) { return static_cast<std::int64_t>(v); }

void fail_once(ValidationReport& rep, const std::string& condition, W witness) {
  if (!rep.has(condition)) rep.fail(condition, std::move(witness));
}

Vec sum_alpha(const PartialAction& pa, const Vec& a) {
  Vec out = pa.alg.zero();
  for (std::size_t s = 0; s < pa.order(); ++s) out = pa.field().sum(out, pa.alpha(s, a));
  return out;
}

}  // namespace

DualElement q_embed(const PartialAction& pa, const Vec& a) {
  DualElement q = dual_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s) q = dual_add(pa, q, dual_basic(pa, s, pa.alpha(s, a)));
  return q;
}

bool q_member(const PartialAction& pa, const DualElement& q) {
  Coring C(pa);
  const Vec& one = pa.alg.unit();
  for (std::size_t t = 0; t < pa.order(); ++t) {
    CoringElement v = C.element(t, one);
    TensorPower d = C.comultiply(v);
    CoringElement lhs = C.zero();
    for (std::size_t k = 0; k < pa.order(); ++k)
      for (std::size_t l = 0; l < pa.order(); ++l) {
        Vec coeff = block_of(d.comps, C.word_index({k, l}), C.n());
        if (is_zero(coeff)) continue;
        Vec value = evaluate(C, q, C.element(l, one));
        lhs = C.add(lhs, C.right_act(C.element(k, coeff), value));
      }
    CoringElement rhs = C.zero();
    Vec qv = evaluate(C, q, v);
    for (std::size_t r = 0; r < pa.order(); ++r) rhs = C.add(rhs, C.element(r, qv));
    if (lhs != rhs) return false;
  }
  return true;
}

Vec morita_tau(const PartialAction& pa, const Vec& b, const Vec& a) {
  return sum_alpha(pa, pa.alg.multiply(b, a));
}

DualElement morita_mu(const PartialAction& pa, const Vec& a, const Vec& b) {
  DualElement out = dual_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s)
    out = dual_add(pa, out, dual_basic(pa, s, pa.alg.multiply(pa.alpha(s, a), b)));
  return out;
}

Vec dual_act_on_algebra(const PartialAction& pa, const Vec& a, const DualElement& f) {
  Vec out = pa.alg.zero();
  for (std::size_t t = 0; t < pa.order(); ++t)
    out = pa.field().sum(out, pa.alg.multiply(pa.alpha(t, a), block_of(f.comps, t, pa.dim())));
  return out;
}

Vec dual_act_on_q(const PartialAction& pa, const DualElement& f, const Vec& a) {
  Vec out = pa.alg.zero();
  for (std::size_t t = 0; t < pa.order(); ++t) {
    Vec x = pa.alg.multiply(pa.alg.multiply(block_of(f.comps, t, pa.dim()), a), pa.e(t));
    out = pa.field().sum(out, pa.alpha(pa.grp.inverse(t), x));
  }
  return out;
}

MoritaContext morita_context(const PartialAction& pa) {
  MoritaContext ctx{invariants(pa), dual_ring(pa), {}};
  ValidationReport& rep = ctx.report;
  const FiniteAlgebra& A = pa.alg;
  const PrimeField& f = A.field();
  const std::size_t n = A.dim();
  const DualRing& R = ctx.dual;
  const Subalgebra& T = ctx.invariants;
  Coring C(pa);

  std::vector<DualElement> q(n);
  std::vector<Vec> q_rows;
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = q_embed(pa, A.basis(i));
    q_rows.push_back(q[i].comps);
    if (!q_member(pa, q[i])) fail_once(rep, "q_member", {ix(i)});
  }
  if (n > 0 && rank(f, Matrix::from_rows(q_rows, q_rows.front().size())) != n) rep.fail("q_injective", {});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec bi = A.basis(i);
      Vec aj = A.basis(j);
      Vec t = morita_tau(pa, bi, aj);
      if (!T.space.contains(f, t)) fail_once(rep, "tau_in_T", {ix(i), ix(j)});
      if (t != evaluate(C, q[j], grouplike_coaction(C, bi))) fail_once(rep, "tau_functional", {ix(i), ix(j)});
      if (morita_mu(pa, bi, aj) != dual_multiply(pa, q[i], j_embed(pa, aj)))
        fail_once(rep, "mu_functional", {ix(i), ix(j)});
    }

  const std::size_t m = R.algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      Vec a = A.basis(i);
      DualElement fk = R.basis_element(k);
      Vec right = dual_act_on_algebra(pa, a, fk);
      if (right != evaluate(C, fk, grouplike_coaction(C, a))) fail_once(rep, "right_action_functional", {ix(i), ix(k)});
      if (q_embed(pa, dual_act_on_q(pa, fk, a)) != dual_multiply(pa, fk, q[i]))
        fail_once(rep, "left_q_action_functional", {ix(k), ix(i)});
      for (std::size_t l = 0; l < m; ++l) {
        DualElement fl = R.basis_element(l);
        DualElement kl = dual_multiply(pa, fk, fl);
        if (dual_act_on_algebra(pa, right, fl) != dual_act_on_algebra(pa, a, kl))
          fail_once(rep, "right_action_module", {ix(i), ix(k), ix(l)});
        if (dual_act_on_q(pa, fk, dual_act_on_q(pa, fl, a)) != dual_act_on_q(pa, kl, a))
          fail_once(rep, "left_q_action_module", {ix(k), ix(l), ix(i)});
      }
    }
  if (rep.ok())
    for (std::size_t i = 0; i < n; ++i)
      if (dual_act_on_algebra(pa, A.basis(i), R.element(f, R.algebra.unit())) != A.basis(i) ||
          dual_act_on_q(pa, R.element(f, R.algebra.unit()), A.basis(i)) != A.basis(i))
        fail_once(rep, "right_action_module", {ix(i)});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec a = A.basis(i);
        Vec qv = A.basis(j);
        Vec a2 = A.basis(k);
        if (A.multiply(morita_tau(pa, a, qv), a2) != dual_act_on_algebra(pa, a, morita_mu(pa, qv, a2)))
          fail_once(rep, "compat_left", {ix(i), ix(j), ix(k)});
        // q' tau(a (x) q) = mu(q' (x) a) . q with q' = b_i, a = b_j, q = b_k
        if (A.multiply(a, morita_tau(pa, qv, a2)) != dual_act_on_q(pa, morita_mu(pa, a, qv), a2))
          fail_once(rep, "compat_right", {ix(i), ix(j), ix(k)});
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec a = A.basis(i);
      Vec qv = A.basis(j);
      for (std::size_t k = 0; k < m; ++k) {
        DualElement fk = R.basis_element(k);
        if (morita_tau(pa, dual_act_on_algebra(pa, a, fk), qv) != morita_tau(pa, a, dual_act_on_q(pa, fk, qv)))
          fail_once(rep, "tau_balanced", {ix(i), ix(k), ix(j)});
      }
      for (std::size_t t = 0; t < T.dim(); ++t) {
        Vec tv = T.element(t);
        if (morita_mu(pa, A.multiply(a, tv), qv) != morita_mu(pa, a, A.multiply(tv, qv)))
          fail_once(rep, "mu_balanced", {ix(i), ix(t), ix(j)});
      }
    }
  return ctx;
}

std::optional<Vec> tau_surjectivity(const PartialAction& pa) {
  const PrimeField& f = pa.field();
  Matrix sum(pa.dim(), pa.dim());
  for (std::size_t s = 0; s < pa.order(); ++s) sum = mat_add(f, sum, pa.alpha_matrix(s));
  return solve_affine(f, sum, pa.alg.unit());
}

bool tau_span_is_invariants(const PartialAction& pa) {
  const FiniteAlgebra& A = pa.alg;
  std::vector<Vec> values;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) values.push_back(morita_tau(pa, A.basis(i), A.basis(j)));
  Subspace span(pa.field(), Matrix::from_rows(values, A.dim()));
  return span == invariants(pa).space;
}

bool mu_surjectivity(const PartialAction& pa) {
  DualRing R = dual_ring(pa);
  const FiniteAlgebra& A = pa.alg;
  std::vector<Vec> values;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) values.push_back(R.coords(morita_mu(pa, A.basis(i), A.basis(j))));
  return rank(pa.field(), Matrix::from_rows(values, R.algebra.dim())) == R.algebra.dim();
}

namespace {

Vec row_major(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// Linear maps phi (row-major, n x n) with phi L_b = L_b phi for each b.
Subspace commutant(const PrimeField& f, std::size_t n, const std::vector<Matrix>& ops) {
  if (n == 0) return Subspace(f, Matrix(0, 0));
  std::vector<Matrix> blocks;
  for (const Matrix& L : ops) {
    Matrix cond(n * n, n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Matrix E(n, n);
        E(r, c) = 1;
        cond.set_column(r * n + c, row_major(mat_sub(f, mat_mul(f, E, L), mat_mul(f, L, E))));
      }
    blocks.push_back(std::move(cond));
  }
  if (blocks.empty()) return Subspace::whole(n * n);
  return Subspace(f, kernel(f, vstack(blocks)));
}

}  // namespace

StarCanVerdict star_can(const PartialAction& pa, const Subalgebra& sub) {
  if (auto moved = first_moved(pa, sub)) throw NotInvariantError(moved->first, moved->second);
  const FiniteAlgebra& A = pa.alg;
  const PrimeField& f = A.field();
  const std::size_t n = A.dim();
  DualRing R = dual_ring(pa);
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < sub.dim(); ++i) ops.push_back(A.left_mult(sub.element(i)));
  Subspace end = commutant(f, n, ops);

  StarCanVerdict v;
  v.dual_dim = R.algebra.dim();
  v.end_dim = end.dim();
  v.map = Matrix(n * n, v.dual_dim);
  bool inside = true;
  for (std::size_t k = 0; k < v.dual_dim; ++k) {
    auto [t, b] = R.blocks.basis_element(k);
    Vec phi = row_major(mat_mul(f, A.right_mult(b), pa.alpha_matrix(t)));
    inside = inside && end.contains(f, phi);
    v.map.set_column(k, phi);
  }
  if (!inside) throw std::logic_error("*can image is not B-linear");
  std::size_t r = v.dual_dim == 0 ? 0 : rank(f, v.map);
  v.injective = r == v.dual_dim;
  v.onto_end = r == v.end_dim;
  return v;
}

ProgeneratorReport progenerator_check(const FiniteAlgebra& balg, const ModuleRep& mod) {
  ValidationReport rep = validate_module(balg, mod);
  if (!rep.ok()) throw StructuralError("progenerator_check: invalid module: " + rep.summary());
  if (mod.side != Side::left) throw StructuralError("progenerator_check: left module expected");
  const PrimeField& f = balg.field();
  const std::size_t k = balg.dim();
  const std::size_t d = mod.dim;

  // F (k x d, row-major) with F act_i = L_i F.
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix L = balg.left_mult(balg.basis(i));
    Matrix cond(k * d, k * d);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        Matrix E(k, d);
        E(r, c) = 1;
        cond.set_column(r * d + c, row_major(mat_sub(f, mat_mul(f, E, mod.act[i]), mat_mul(f, L, E))));
      }
    blocks.push_back(std::move(cond));
  }
  Matrix homs = kernel(f, vstack(blocks));
  ProgeneratorReport out;
  out.hom_dim = homs.rows();
  auto hom = [&](std::size_t p) {
    Matrix F(k, d);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < d; ++c) F(r, c) = homs(p, r * d + c);
    return F;
  };

  std::vector<Vec> values;
  for (std::size_t p = 0; p < out.hom_dim; ++p) {
    Matrix F = hom(p);
    for (std::size_t c = 0; c < d; ++c) values.push_back(F.column(c));
  }
  out.trace_dim = values.empty() ? 0 : rank(f, Matrix::from_rows(values, k));
  out.generator = out.trace_dim == k;

  // Unknowns c_{j,p}: f_j = sum_p c_{j,p} F_p, and sum_j f_j(m) . m_j = m
  // for the basis m_j of M.
  if (d == 0) {
    out.projective = true;
    return out;
  }
  Matrix system(d * d, d * out.hom_dim);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t p = 0; p < out.hom_dim; ++p) {
      Matrix F = hom(p);
      Vec col(d * d, 0);
      for (std::size_t r = 0; r < d; ++r) {
        Vec image = action_of(balg, mod, F.column(r)).column(j);
        for (std::size_t x = 0; x < d; ++x) col[r * d + x] = image[x];
      }
      system.set_column(j * out.hom_dim + p, col);
    }
  Vec target(d * d, 0);
  for (std::size_t r = 0; r < d; ++r) target[r * d + r] = 1;
  out.projective = solve_affine(f, system, target).has_value();
  return out;
}

ProgeneratorReport progenerator_check(const FiniteAlgebra& alg, const Subalgebra& sub) {
  return progenerator_check(subalgebra_as_algebra(alg, sub), restrict_to_subalgebra(alg, sub, Side::left));
}

Dashboard theorem_dashboard(const PartialAction& pa, const Subalgebra& sub) {
  Dashboard d;
  d.can_bijective = canonical_map(pa, sub).bijective;
  d.progenerator = progenerator_check(pa.alg, sub).progenerator();
  d.cond1 = d.can_bijective && d.progenerator;
  d.star_can_bijective = star_can(pa, sub).bijective();
  d.cond2 = d.star_can_bijective && d.progenerator;
  d.base_is_invariants = sub.space == invariants(pa).space;
  d.tau_surjective = tau_surjectivity(pa).has_value();
  d.mu_surjective = mu_surjectivity(pa);
  d.cond3 = d.base_is_invariants && d.tau_surjective && d.mu_surjective;

  bool probes = true;
  for (const ModuleRep& n : probe_modules(pa, sub)) probes = probes && unit_probe(pa, sub, n).bijective;
  for (const DescentDatum& m : probe_comodules(pa, sub)) probes = probes && counit_probe(pa, sub, m).bijective;
  d.probes_bijective = probes;
  d.cond4_probe = d.base_is_invariants && probes;

  if (d.cond2 != d.cond3) d.inconsistencies.push_back("(2) <=> (3)");
  if (d.cond2 && !d.can_bijective) d.inconsistencies.push_back("(2) => (1a)");
  if (d.cond1 != d.cond2) d.inconsistencies.push_back("(1) <=> (2)");
  if (d.cond3 && !d.cond4_probe) d.inconsistencies.push_back("(3) => (4-probe)");
  return d;
}

}  // namespace pgalois
