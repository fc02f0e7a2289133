#include "pgalois/dual.hpp"

#include <string>

namespace pgalois {

namespace {

using W = std::vector<std::int64_t>;

std::int64_t ix(std::size_t v) { return static_cast<std::int64_t>(v); }

void fail_once(ValidationReport& rep, const std::string& condition, W witness) {
  if (!rep.has(condition)) rep.fail(condition, std::move(witness));
}

void require_valid(const PartialAction& pa) {
  ValidationReport rep = validate_partial_action(pa);
  if (!rep.ok()) throw StructuralError("invalid partial action: " + rep.summary());
}

}  // namespace

DualElement dual_zero(const PartialAction& pa) { return {Vec(pa.order() * pa.dim(), 0)}; }

DualElement dual_basic(const PartialAction& pa, std::size_t s, const Vec& a) {
  DualElement x = dual_zero(pa);
  add_to_block(pa.field(), x.comps, s, pa.dim(), pa.alg.multiply(a, pa.e(s)));
  return x;
}

DualElement dual_normalize(const PartialAction& pa, DualElement x) {
  DualElement out = dual_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s)
    add_to_block(pa.field(), out.comps, s, pa.dim(), pa.alg.multiply(block_of(x.comps, s, pa.dim()), pa.e(s)));
  return out;
}

DualElement dual_add(const PartialAction& pa, const DualElement& x, const DualElement& y) {
  return {pa.field().sum(x.comps, y.comps)};
}

DualElement j_embed(const PartialAction& pa, const Vec& a) { return dual_basic(pa, pa.grp.id, a); }

DualElement dual_multiply(const PartialAction& pa, const DualElement& x, const DualElement& y) {
  const std::size_t n = pa.dim();
  DualElement out = dual_zero(pa);
  for (std::size_t t = 0; t < pa.order(); ++t) {
    Vec b = block_of(x.comps, t, n);
    if (is_zero(b)) continue;
    for (std::size_t s = 0; s < pa.order(); ++s) {
      Vec a = block_of(y.comps, s, n);
      if (is_zero(a)) continue;
      add_to_block(pa.field(), out.comps, pa.grp.mul(s, t), n, pa.alg.multiply(pa.alpha(s, b), a));
    }
  }
  return dual_normalize(pa, out);
}

Vec evaluate(const Coring& c, const DualElement& x, const CoringElement& y) {
  const FiniteAlgebra& A = c.algebra();
  Vec out = A.zero();
  for (std::size_t s = 0; s < c.order(); ++s) {
    Vec term = A.multiply(A.multiply(block_of(y.comps, s, c.n()), c.action().e(s)), block_of(x.comps, s, c.n()));
    out = c.field().sum(out, term);
  }
  return out;
}

DualElement compose_functionals(const Coring& c, const DualElement& x, const DualElement& y) {
  const PartialAction& pa = c.action();
  DualElement out = dual_zero(pa);
  for (std::size_t r = 0; r < c.order(); ++r) {
    TensorPower d = c.comultiply(c.element(r, c.algebra().unit()));
    CoringElement inner = c.zero();
    for (std::size_t k = 0; k < c.order(); ++k)
      for (std::size_t l = 0; l < c.order(); ++l) {
        Vec coeff = block_of(d.comps, c.word_index({k, l}), c.n());
        if (is_zero(coeff)) continue;
        Vec value = evaluate(c, x, c.element(l, c.algebra().unit()));
        inner = c.add(inner, c.right_act(c.element(k, coeff), value));
      }
    add_to_block(c.field(), out.comps, r, c.n(), evaluate(c, y, inner));
  }
  return dual_normalize(pa, out);
}

DualRing dual_ring(const PartialAction& pa) {
  require_valid(pa);
  BlockSpace blocks = idempotent_blocks(pa);
  const PrimeField& f = pa.field();
  auto product = [&](std::size_t k, std::size_t l) {
    DualElement x{blocks.flat_basis_element(k)};
    DualElement y{blocks.flat_basis_element(l)};
    return blocks.coords(dual_multiply(pa, x, y).comps);
  };
  Vec unit = blocks.coords(j_embed(pa, pa.alg.unit()).comps);
  FiniteAlgebra alg = FiniteAlgebra::from_products(f, blocks.dim(), product, unit);
  return DualRing{std::move(alg), std::move(blocks)};
}

ValidationReport check_dual_ring(const PartialAction& pa) {
  DualRing R = dual_ring(pa);
  Coring C(pa);
  const FiniteAlgebra& A = pa.alg;
  ValidationReport rep;
  rep.merge(validate_algebra(R.algebra), "algebra.");
  for (std::size_t k = 0; k < R.algebra.dim(); ++k)
    for (std::size_t l = 0; l < R.algebra.dim(); ++l) {
      DualElement x = R.basis_element(k);
      DualElement y = R.basis_element(l);
      if (dual_multiply(pa, x, y) != compose_functionals(C, x, y)) fail_once(rep, "composition", {ix(k), ix(l)});
    }
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t s = 0; s < pa.order(); ++s) {
      Vec b = A.basis(i);
      DualElement lhs = dual_multiply(pa, j_embed(pa, b), dual_basic(pa, s, A.unit()));
      if (lhs != dual_basic(pa, s, pa.alpha(s, b))) fail_once(rep, "left_action", {ix(i), ix(s)});
    }
  if (R.coords(j_embed(pa, A.unit())) != R.algebra.unit()) fail_once(rep, "j_unital", {});
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (dual_multiply(pa, j_embed(pa, A.basis(i)), j_embed(pa, A.basis(j))) != j_embed(pa, A.product(i, j)))
        fail_once(rep, "j_multiplicative", {ix(i), ix(j)});
  return rep;
}

ValidationReport dual_vs_skew(const PartialAction& pa) {
  if (!pa.alg.is_commutative()) throw StructuralError("dual_vs_skew requires a commutative algebra");
  DualRing R = dual_ring(pa);
  SkewGroupRing S = skew_group_ring(pa);
  ValidationReport rep;
  // u_s a and a u_s share the block coordinates of (+)_s A e_s, so the
  // comparison map is the identity on coordinates.
  if (R.algebra.dim() != S.algebra.dim() || R.blocks.flat_size() != S.blocks.flat_size()) {
    rep.fail("dimension", {ix(R.algebra.dim()), ix(S.algebra.dim())});
    return rep;
  }
  if (R.algebra.unit() != S.algebra.unit()) rep.fail("unit", {});
  for (std::size_t k = 0; k < R.algebra.dim(); ++k)
    for (std::size_t l = 0; l < R.algebra.dim(); ++l)
      if (R.algebra.product(k, l) != S.algebra.product(l, k)) fail_once(rep, "anti_multiplicative", {ix(k), ix(l)});
  return rep;
}

DualTensor dual_tensor_zero(const PartialAction& pa) { return {Vec(pa.order() * pa.order() * pa.dim(), 0)}; }

namespace {

std::size_t pair_index(const PartialAction& pa, std::size_t s, std::size_t t) { return s * pa.order() + t; }

DualTensor dual_tensor_normalize(const PartialAction& pa, DualTensor x) {
  const FiniteAlgebra& A = pa.alg;
  DualTensor out = dual_tensor_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s)
    for (std::size_t t = 0; t < pa.order(); ++t) {
      std::size_t w = pair_index(pa, s, t);
      Vec d = block_of(x.comps, w, pa.dim());
      if (is_zero(d)) continue;
      Vec trunc = A.multiply(pa.e(t), pa.e(pa.grp.mul(t, s)));
      add_to_block(pa.field(), out.comps, w, pa.dim(), A.multiply(d, trunc));
    }
  return out;
}

}  // namespace

DualTensor dual_tensor_basic(const PartialAction& pa, std::size_t s, std::size_t t, const Vec& d) {
  DualTensor x = dual_tensor_zero(pa);
  add_to_block(pa.field(), x.comps, pair_index(pa, s, t), pa.dim(), d);
  return dual_tensor_normalize(pa, x);
}

DualTensor dual_tensor(const PartialAction& pa, const DualElement& x, const DualElement& y) {
  const std::size_t n = pa.dim();
  DualTensor out = dual_tensor_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s) {
    Vec a = block_of(x.comps, s, n);
    if (is_zero(a)) continue;
    for (std::size_t t = 0; t < pa.order(); ++t) {
      Vec b = block_of(y.comps, t, n);
      if (is_zero(b)) continue;
      add_to_block(pa.field(), out.comps, pair_index(pa, s, t), n, pa.alg.multiply(pa.alpha(t, a), b));
    }
  }
  return dual_tensor_normalize(pa, out);
}

DualTensor dual_tensor_add(const PartialAction& pa, const DualTensor& x, const DualTensor& y) {
  return {pa.field().sum(x.comps, y.comps)};
}

DualTensor left_multiply(const PartialAction& pa, const DualElement& r, const DualTensor& t) {
  DualTensor out = dual_tensor_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s)
    for (std::size_t u = 0; u < pa.order(); ++u) {
      Vec d = block_of(t.comps, pair_index(pa, s, u), pa.dim());
      if (is_zero(d)) continue;
      DualElement left = dual_multiply(pa, r, dual_basic(pa, s, pa.alg.unit()));
      out = dual_tensor_add(pa, out, dual_tensor(pa, left, dual_basic(pa, u, d)));
    }
  return out;
}

DualTensor right_multiply(const PartialAction& pa, const DualTensor& t, const DualElement& r) {
  DualTensor out = dual_tensor_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s)
    for (std::size_t u = 0; u < pa.order(); ++u) {
      Vec d = block_of(t.comps, pair_index(pa, s, u), pa.dim());
      if (is_zero(d)) continue;
      DualElement right = dual_multiply(pa, dual_basic(pa, u, d), r);
      out = dual_tensor_add(pa, out, dual_tensor(pa, dual_basic(pa, s, pa.alg.unit()), right));
    }
  return out;
}

DualTensor casimir(const PartialAction& pa) {
  DualTensor e = dual_tensor_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s) {
    DualElement left = dual_basic(pa, pa.grp.inverse(s), pa.alg.unit());
    DualElement right = dual_basic(pa, s, pa.alg.unit());
    e = dual_tensor_add(pa, e, dual_tensor(pa, left, right));
  }
  return e;
}

Vec nu_bar(const PartialAction& pa, const DualElement& x) { return block_of(x.comps, pa.grp.id, pa.dim()); }

DualElement contract_left(const PartialAction& pa, const DualTensor& t) {
  DualElement out = dual_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s)
    for (std::size_t u = 0; u < pa.order(); ++u) {
      Vec d = block_of(t.comps, pair_index(pa, s, u), pa.dim());
      if (is_zero(d)) continue;
      Vec nu = nu_bar(pa, dual_basic(pa, s, pa.alg.unit()));
      out = dual_add(pa, out, dual_multiply(pa, j_embed(pa, nu), dual_basic(pa, u, d)));
    }
  return out;
}

DualElement contract_right(const PartialAction& pa, const DualTensor& t) {
  DualElement out = dual_zero(pa);
  for (std::size_t s = 0; s < pa.order(); ++s)
    for (std::size_t u = 0; u < pa.order(); ++u) {
      Vec d = block_of(t.comps, pair_index(pa, s, u), pa.dim());
      if (is_zero(d)) continue;
      Vec nu = nu_bar(pa, dual_basic(pa, u, d));
      out = dual_add(pa, out, dual_multiply(pa, dual_basic(pa, s, pa.alg.unit()), j_embed(pa, nu)));
    }
  return out;
}

std::vector<DualElement> dual_generators(const PartialAction& pa) {
  std::vector<DualElement> gens;
  for (std::size_t i = 0; i < pa.dim(); ++i) gens.push_back(j_embed(pa, pa.alg.basis(i)));
  for (std::size_t s = 0; s < pa.order(); ++s) gens.push_back(dual_basic(pa, s, pa.alg.unit()));
  return gens;
}

ValidationReport frobenius_check(const PartialAction& pa) {
  require_valid(pa);
  ValidationReport rep;
  DualTensor e = casimir(pa);
  DualElement one = j_embed(pa, pa.alg.unit());
  if (contract_left(pa, e) != one) rep.fail("casimir_left", {});
  if (contract_right(pa, e) != one) rep.fail("casimir_right", {});
  std::vector<DualElement> gens = dual_generators(pa);
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (left_multiply(pa, gens[g], e) != right_multiply(pa, e, gens[g])) fail_once(rep, "central", {ix(g)});

  DualRing R = dual_ring(pa);
  const FiniteAlgebra& A = pa.alg;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t k = 0; k < R.algebra.dim(); ++k) {
      Vec a = A.basis(i);
      DualElement x = R.basis_element(k);
      if (nu_bar(pa, dual_multiply(pa, j_embed(pa, a), x)) != A.multiply(a, nu_bar(pa, x)))
        fail_once(rep, "nu_left_linear", {ix(i), ix(k)});
      if (nu_bar(pa, dual_multiply(pa, x, j_embed(pa, a))) != A.multiply(nu_bar(pa, x), a))
        fail_once(rep, "nu_right_linear", {ix(i), ix(k)});
    }
  return rep;
}

}  // namespace pgalois
