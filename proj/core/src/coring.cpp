#include "pgalois/coring.hpp"

#include <string>

namespace pgalois {

namespace {

using W = std::vector<std::int64_t>;

std::int64_t ix(std::size_t v) { return static_cast<std::int64_t>(v); }

void fail_once(ValidationReport& rep, const std::string& condition, W witness) {
  if (!rep.has(condition)) rep.fail(condition, std::move(witness));
}

// Index of b_i (x) b_j (x) ... in the flat tensor square or cube of A.
Vec kron_vec(const PrimeField& f, const Vec& x, const Vec& y) {
  Vec out(x.size() * y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = f.mul(x[i], y[j]);
  }
  return out;
}

}  // namespace

Coring::Coring(PartialAction pa) : pa_(std::move(pa)), blocks_(idempotent_blocks(pa_)) {}

CoringElement Coring::element(std::size_t s, const Vec& a) const {
  CoringElement c = zero();
  add_to_block(field(), c.comps, s, n(), algebra().multiply(a, pa_.e(s)));
  return c;
}

CoringElement Coring::basis_element(std::size_t k) const { return {blocks_.flat_basis_element(k)}; }

CoringElement Coring::normalize(CoringElement c) const {
  CoringElement out = zero();
  for (std::size_t s = 0; s < order(); ++s)
    add_to_block(field(), out.comps, s, n(), algebra().multiply(block_of(c.comps, s, n()), pa_.e(s)));
  return out;
}

CoringElement Coring::add(const CoringElement& x, const CoringElement& y) const {
  return {field().sum(x.comps, y.comps)};
}

CoringElement Coring::left_act(const Vec& a, const CoringElement& c) const {
  CoringElement out = zero();
  for (std::size_t s = 0; s < order(); ++s)
    add_to_block(field(), out.comps, s, n(), algebra().multiply(a, block_of(c.comps, s, n())));
  return normalize(out);
}

CoringElement Coring::right_act(const CoringElement& c, const Vec& a) const {
  CoringElement out = zero();
  for (std::size_t s = 0; s < order(); ++s)
    add_to_block(field(), out.comps, s, n(), algebra().multiply(block_of(c.comps, s, n()), pa_.alpha(s, a)));
  return normalize(out);
}

TensorPower Coring::zero_tensor(std::size_t degree) const {
  return TensorPower{degree, Vec(word_count(degree) * n(), 0)};
}

std::size_t Coring::word_count(std::size_t degree) const {
  std::size_t c = 1;
  for (std::size_t i = 0; i < degree; ++i) c *= order();
  return c;
}

std::vector<std::size_t> Coring::word(std::size_t index, std::size_t degree) const {
  std::vector<std::size_t> w(degree);
  for (std::size_t i = degree; i-- > 0;) {
    w[i] = index % order();
    index /= order();
  }
  return w;
}

std::size_t Coring::word_index(const std::vector<std::size_t>& w) const {
  std::size_t index = 0;
  for (std::size_t s : w) index = index * order() + s;
  return index;
}

Vec Coring::word_idempotent(const std::vector<std::size_t>& w) const {
  Vec e = algebra().unit();
  std::size_t prefix = pa_.grp.id;
  for (std::size_t s : w) {
    prefix = pa_.grp.mul(prefix, s);
    e = algebra().multiply(e, pa_.e(prefix));
  }
  return e;
}

TensorPower Coring::normalize(TensorPower t) const {
  for (std::size_t w = 0; w < word_count(t.degree); ++w) {
    Vec d = block_of(t.comps, w, n());
    if (is_zero(d)) continue;
    Vec r = algebra().multiply(d, word_idempotent(word(w, t.degree)));
    std::copy(r.begin(), r.end(), t.comps.begin() + static_cast<std::ptrdiff_t>(w * n()));
  }
  return t;
}

TensorPower Coring::basic(const std::vector<std::size_t>& w, const Vec& d) const {
  TensorPower t = zero_tensor(w.size());
  add_to_block(field(), t.comps, word_index(w), n(), algebra().multiply(d, word_idempotent(w)));
  return t;
}

TensorPower Coring::add(const TensorPower& x, const TensorPower& y) const {
  if (x.degree != y.degree) throw std::invalid_argument("tensor degrees differ");
  return TensorPower{x.degree, field().sum(x.comps, y.comps)};
}

TensorPower Coring::right_act(const TensorPower& t, const Vec& a) const {
  TensorPower out = zero_tensor(t.degree);
  for (std::size_t w = 0; w < word_count(t.degree); ++w) {
    Vec d = block_of(t.comps, w, n());
    if (is_zero(d)) continue;
    std::vector<std::size_t> letters = word(w, t.degree);
    Vec x = a;
    for (std::size_t i = letters.size(); i-- > 0;) x = pa_.alpha(letters[i], x);
    add_to_block(field(), out.comps, w, n(), algebra().multiply(d, x));
  }
  return normalize(out);
}

TensorPower Coring::tensor(const TensorPower& x, const TensorPower& y) const {
  TensorPower out = zero_tensor(x.degree + y.degree);
  const std::size_t ny = word_count(y.degree);
  for (std::size_t u = 0; u < word_count(x.degree); ++u) {
    Vec d = block_of(x.comps, u, n());
    if (is_zero(d)) continue;
    std::vector<std::size_t> letters = word(u, x.degree);
    for (std::size_t w = 0; w < ny; ++w) {
      Vec c = block_of(y.comps, w, n());
      if (is_zero(c)) continue;
      for (std::size_t i = letters.size(); i-- > 0;) c = pa_.alpha(letters[i], c);
      add_to_block(field(), out.comps, u * ny + w, n(), algebra().multiply(d, c));
    }
  }
  return normalize(out);
}

TensorPower Coring::as_tensor(const CoringElement& c) const { return normalize(TensorPower{1, c.comps}); }

TensorPower Coring::comultiply(const CoringElement& c) const {
  const FiniteGroup& G = pa_.grp;
  TensorPower out = zero_tensor(2);
  for (std::size_t s = 0; s < order(); ++s) {
    Vec a = block_of(c.comps, s, n());
    if (is_zero(a)) continue;
    for (std::size_t k = 0; k < order(); ++k)
      add_to_block(field(), out.comps, word_index({k, G.mul(G.inverse(k), s)}), n(), a);
  }
  return normalize(out);
}

Vec Coring::counit(const CoringElement& c) const { return block_of(c.comps, pa_.grp.id, n()); }

TensorPower Coring::delta_left(const TensorPower& t) const {
  const FiniteGroup& G = pa_.grp;
  TensorPower out = zero_tensor(3);
  for (std::size_t s = 0; s < order(); ++s)
    for (std::size_t u = 0; u < order(); ++u) {
      Vec d = block_of(t.comps, word_index({s, u}), n());
      if (is_zero(d)) continue;
      for (std::size_t k = 0; k < order(); ++k)
        add_to_block(field(), out.comps, word_index({k, G.mul(G.inverse(k), s), u}), n(), d);
    }
  return normalize(out);
}

TensorPower Coring::delta_right(const TensorPower& t) const {
  const FiniteGroup& G = pa_.grp;
  TensorPower out = zero_tensor(3);
  for (std::size_t s = 0; s < order(); ++s)
    for (std::size_t u = 0; u < order(); ++u) {
      Vec d = block_of(t.comps, word_index({s, u}), n());
      if (is_zero(d)) continue;
      for (std::size_t k = 0; k < order(); ++k)
        add_to_block(field(), out.comps, word_index({s, k, G.mul(G.inverse(k), u)}), n(), d);
    }
  return normalize(out);
}

CoringElement Coring::counit_right(const TensorPower& t) const {
  const std::size_t id = pa_.grp.id;
  CoringElement out = zero();
  for (std::size_t s = 0; s < order(); ++s) {
    Vec d = block_of(t.comps, word_index({s, id}), n());
    if (is_zero(d)) continue;
    out = add(out, right_act(element(s, d), pa_.e(id)));
  }
  return out;
}

CoringElement Coring::counit_left(const TensorPower& t) const {
  const std::size_t id = pa_.grp.id;
  CoringElement out = zero();
  for (std::size_t u = 0; u < order(); ++u) {
    Vec d = block_of(t.comps, word_index({id, u}), n());
    if (is_zero(d)) continue;
    out = add(out, element(u, algebra().multiply(d, pa_.e(id))));
  }
  return out;
}

Coring build_coring(const PartialAction& pa) {
  ValidationReport rep = validate_partial_action(pa);
  if (!rep.ok()) throw StructuralError("invalid partial action: " + rep.summary());
  return Coring(pa);
}

CoringElement right_act(const Coring& c, const CoringElement& x, const Vec& a) { return c.right_act(x, a); }
TensorPower comultiply(const Coring& c, const CoringElement& x) { return c.comultiply(x); }
Vec counit(const Coring& c, const CoringElement& x) { return c.counit(x); }

ValidationReport check_coring_axioms(const Coring& c) {
  ValidationReport rep;
  const FiniteAlgebra& A = c.algebra();
  const std::size_t n = c.n();
  for (std::size_t s = 0; s < c.order(); ++s) {
    const Subspace& block = c.blocks().block(s);
    for (std::size_t k = 0; k < block.dim(); ++k) {
      CoringElement x = c.element(s, block.vector(k));
      TensorPower dx = c.comultiply(x);
      if (c.delta_left(dx) != c.delta_right(dx)) fail_once(rep, "coassociativity", {ix(s), ix(k)});
      if (c.counit_left(dx) != x) fail_once(rep, "left_counit", {ix(s), ix(k)});
      if (c.counit_right(dx) != x) fail_once(rep, "right_counit", {ix(s), ix(k)});
      if (c.right_act(x, A.unit()) != x) fail_once(rep, "right_action_unital", {ix(s), ix(k)});
      for (std::size_t i = 0; i < n; ++i) {
        Vec bi = A.basis(i);
        CoringElement xb = c.right_act(x, bi);
        if (c.comultiply(xb) != c.right_act(dx, bi)) fail_once(rep, "delta_right_linear", {ix(s), ix(k), ix(i)});
        if (c.counit(xb) != A.multiply(c.counit(x), bi))
          fail_once(rep, "counit_right_linear", {ix(s), ix(k), ix(i)});
        for (std::size_t j = 0; j < n; ++j)
          if (c.right_act(xb, A.basis(j)) != c.right_act(x, A.product(i, j)))
            fail_once(rep, "right_action_associative", {ix(s), ix(k), ix(i), ix(j)});
      }
    }
  }
  return rep;
}

CoringElement grouplike(const Coring& c) {
  CoringElement x = c.zero();
  for (std::size_t s = 0; s < c.order(); ++s) x = c.add(x, c.element(s, c.algebra().unit()));
  TensorPower tx = c.as_tensor(x);
  if (c.comultiply(x) != c.tensor(tx, tx)) throw std::logic_error("sum of v_s is not grouplike: Delta(x) != x (x) x");
  if (c.counit(x) != c.algebra().unit()) throw std::logic_error("sum of v_s is not grouplike: eps(x) != 1");
  return x;
}

CoringElement grouplike_coaction(const Coring& c, const Vec& a) {
  CoringElement x = c.zero();
  for (std::size_t s = 0; s < c.order(); ++s) x = c.add(x, c.element(s, c.algebra().unit()));
  return c.right_act(x, a);
}

Matrix balanced_relations(const FiniteAlgebra& alg, const Subalgebra& sub) {
  const PrimeField& f = alg.field();
  const std::size_t n = alg.dim();
  std::vector<Vec> rows;
  for (std::size_t b = 0; b < sub.dim(); ++b) {
    Vec beta = sub.element(b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec bi = alg.basis(i);
        Vec bj = alg.basis(j);
        rows.push_back(f.diff(kron_vec(f, alg.multiply(bi, beta), bj), kron_vec(f, bi, alg.multiply(beta, bj))));
      }
  }
  return Matrix::from_rows(rows, n * n);
}

namespace {

Matrix triple_relations(const FiniteAlgebra& alg, const Subalgebra& sub) {
  const PrimeField& f = alg.field();
  const std::size_t n = alg.dim();
  Matrix pair = balanced_relations(alg, sub);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < pair.rows(); ++r) {
    Vec rel = pair.row_vec(r);
    for (std::size_t k = 0; k < n; ++k) {
      rows.push_back(kron_vec(f, rel, alg.basis(k)));
      rows.push_back(kron_vec(f, alg.basis(k), rel));
    }
  }
  return Matrix::from_rows(rows, n * n * n);
}

bool kills(const PrimeField& f, const Matrix& map, const Matrix& relations) {
  for (std::size_t r = 0; r < relations.rows(); ++r)
    if (!is_zero(mat_vec(f, map, relations.row_vec(r)))) return false;
  return true;
}

Matrix raw_sweedler_delta(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Vec& one = alg.unit();
  Matrix m(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m((i * n + k) * n + j, i * n + j) = one[k];
  return m;
}

Matrix raw_multiplication(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set_column(i * n + j, alg.product(i, j));
  return m;
}

}  // namespace

SweedlerCoring sweedler_coring(const FiniteAlgebra& alg, const Subalgebra& sub) {
  ValidationReport rep = validate_subalgebra(alg, sub.basis());
  if (!rep.ok()) throw StructuralError("invalid subring: " + rep.summary());
  const PrimeField& f = alg.field();
  const std::size_t n = alg.dim();
  SweedlerCoring d;
  d.pair = build_quotient(f, n * n, balanced_relations(alg, sub));
  d.triple = build_quotient(f, n * n * n, triple_relations(alg, sub));
  Matrix raw_delta = raw_sweedler_delta(alg);
  Matrix raw_mult = raw_multiplication(alg);
  if (!kills(f, mat_mul(f, d.triple.projection, raw_delta), d.pair.relations) || !kills(f, raw_mult, d.pair.relations))
    throw std::logic_error("Sweedler structure maps are not balanced");
  d.delta = mat_mul(f, mat_mul(f, d.triple.projection, raw_delta), d.pair.section);
  d.counit = mat_mul(f, raw_mult, d.pair.section);
  return d;
}

NotInvariantError::NotInvariantError(std::size_t b, std::size_t s)
    : std::invalid_argument("subring basis element " + std::to_string(b) + " is moved by group element " +
                            std::to_string(s)),
      basis_index(b),
      group_element(s) {}

namespace {

CoringElement can_pure(const Coring& c, const Vec& a, const Vec& b) {
  CoringElement out = c.zero();
  for (std::size_t s = 0; s < c.order(); ++s)
    out = c.add(out, c.element(s, c.algebra().multiply(a, c.action().alpha(s, b))));
  return out;
}

}  // namespace

GaloisVerdict canonical_map(const PartialAction& pa, const Subalgebra& sub) {
  ValidationReport rep = validate_partial_action(pa);
  if (!rep.ok()) throw StructuralError("invalid partial action: " + rep.summary());
  if (auto moved = first_moved(pa, sub)) throw NotInvariantError(moved->first, moved->second);
  const FiniteAlgebra& A = pa.alg;
  const PrimeField& f = A.field();
  const std::size_t n = A.dim();
  SweedlerCoring D = sweedler_coring(A, sub);
  Coring C(pa);

  std::vector<CoringElement> can_of(n * n);
  Matrix raw(C.dim(), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      can_of[i * n + j] = can_pure(C, A.basis(i), A.basis(j));
      raw.set_column(i * n + j, C.coords(can_of[i * n + j]));
    }

  GaloisVerdict v;
  v.source_dim = D.pair.dim;
  v.target_dim = C.dim();
  v.can_matrix = mat_mul(f, raw, D.pair.section);
  v.bijective = v.source_dim == v.target_dim && rank(f, v.can_matrix) == v.target_dim;

  bool ok = kills(f, raw, D.pair.relations);
  const std::size_t t2 = C.word_count(2) * n;
  Matrix raw_tensor(t2, n * n * n);
  for (std::size_t i = 0; i < n && ok; ++i) {
    TensorPower left = C.as_tensor(can_pure(C, A.basis(i), A.unit()));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        raw_tensor.set_column((i * n + j) * n + k, C.tensor(left, C.as_tensor(can_of[j * n + k])).comps);
  }
  ok = ok && kills(f, raw_tensor, D.triple.relations);
  if (ok) {
    Matrix raw_delta = raw_sweedler_delta(A);
    for (std::size_t q = 0; q < D.pair.dim && ok; ++q) {
      CoringElement x{C.blocks().from_coords(f, v.can_matrix.column(q))};
      Vec lifted = mat_vec(f, raw_delta, D.pair.section.column(q));
      ok = C.comultiply(x).comps == mat_vec(f, raw_tensor, lifted) && C.counit(x) == D.counit.column(q);
    }
  }
  v.coring_morphism_ok = ok;
  return v;
}

bool is_partial_galois(const PartialAction& pa) { return canonical_map(pa, invariants(pa)).bijective; }

}  // namespace pgalois
