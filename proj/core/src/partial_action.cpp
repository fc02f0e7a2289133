#include "pgalois/partial_action.hpp"

#include <stdexcept>
#include <string>

namespace pgalois {

namespace {

using W = std::vector<std::int64_t>;

std::int64_t ix(std::size_t v) { return static_cast<std::int64_t>(v); }

// Records only the first witness of each condition.
void fail_once(ValidationReport& rep, const std::string& condition, W witness, std::string detail = {}) {
  if (!rep.has(condition)) rep.fail(condition, std::move(witness), std::move(detail));
}

void check_square(const Matrix& m, std::size_t n, const PrimeField& f, const std::string& what) {
  if (m.rows() != n || m.cols() != n) throw StructuralError(what + ": expected " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) >= f.modulus()) throw StructuralError(what + ": entry not reduced mod p");
}

void check_element(const Vec& v, std::size_t n, const PrimeField& f, const std::string& what) {
  if (v.size() != n) throw StructuralError(what + ": expected length " + std::to_string(n));
  for (Residue r : v)
    if (r >= f.modulus()) throw StructuralError(what + ": entry not reduced mod p");
}

}  // namespace

Vec PartialAction::alpha(std::size_t s, const Vec& a) const {
  return mat_vec(field(), maps[s], alg.multiply(a, idem[grp.inverse(s)]));
}

Matrix PartialAction::alpha_matrix(std::size_t s) const {
  return mat_mul(field(), maps[s], alg.right_mult(idem[grp.inverse(s)]));
}

Vec alpha_apply(const PartialAction& pa, std::size_t s, const Vec& a) {
  if (a.size() != pa.dim()) throw StructuralError("alpha_apply: length mismatch");
  return pa.alpha(s, a);
}

ValidationReport validate_partial_action(const PartialAction& pa) {
  const std::size_t n = pa.dim();
  const std::size_t g = pa.order();
  const PrimeField& f = pa.field();
  if (pa.idem.size() != g) throw StructuralError("partial action: need one idempotent per group element");
  if (pa.maps.size() != g) throw StructuralError("partial action: need one map per group element");
  for (std::size_t s = 0; s < g; ++s) {
    check_element(pa.idem[s], n, f, "idempotent " + std::to_string(s));
    check_square(pa.maps[s], n, f, "alpha matrix " + std::to_string(s));
  }

  ValidationReport rep;
  rep.merge(validate_algebra(pa.alg), "algebra.");
  rep.merge(validate_group(pa.grp), "group.");
  if (!rep.ok()) return rep;

  const FiniteAlgebra& A = pa.alg;
  const FiniteGroup& G = pa.grp;
  for (std::size_t s = 0; s < g; ++s)
    if (!is_central_idempotent(A, pa.e(s))) fail_once(rep, "central_idempotent", {ix(s)});
  if (!rep.ok()) return rep;

  if (pa.e(G.id) != A.unit()) fail_once(rep, "unit_idempotent", {});
  const Matrix& L1 = pa.maps[G.id];
  for (std::size_t i = 0; i < n; ++i)
    if (L1.column(i) != A.basis(i)) fail_once(rep, "identity_map", {ix(i)});

  for (std::size_t s = 0; s < g; ++s) {
    const std::size_t si = G.inverse(s);
    const Vec& dom = pa.e(si);
    const Vec& cod = pa.e(s);
    const Matrix& L = pa.maps[s];
    for (std::size_t i = 0; i < n; ++i) {
      Vec b = A.basis(i);
      Vec img = mat_vec(f, L, b);
      if (img != mat_vec(f, L, A.multiply(b, dom))) fail_once(rep, "kills_complement", {ix(s), ix(i)});
      if (A.multiply(img, cod) != img) fail_once(rep, "image_in_ideal", {ix(s), ix(i)});
    }
    if (mat_vec(f, L, dom) != cod) fail_once(rep, "domain_unit", {ix(s)});

    Subspace domain = ideal_of(A, dom);
    Subspace codomain = ideal_of(A, cod);
    std::vector<Vec> images;
    for (std::size_t i = 0; i < domain.dim(); ++i) images.push_back(mat_vec(f, L, domain.vector(i)));
    std::size_t r = images.empty() ? 0 : rank(f, Matrix::from_rows(images, n));
    if (r != domain.dim() || r != codomain.dim())
      fail_once(rep, "bijective", {ix(s), ix(r)},
                "rank " + std::to_string(r) + " on domain of dimension " + std::to_string(domain.dim()) +
                    ", codomain dimension " + std::to_string(codomain.dim()));

    for (std::size_t i = 0; i < domain.dim(); ++i)
      for (std::size_t j = 0; j < domain.dim(); ++j) {
        Vec lhs = mat_vec(f, L, A.multiply(domain.vector(i), domain.vector(j)));
        Vec rhs = A.multiply(images[i], images[j]);
        if (lhs != rhs) fail_once(rep, "multiplicative", {ix(s), ix(i), ix(j)});
      }
  }

  for (std::size_t s = 0; s < g; ++s)
    for (std::size_t t = 0; t < g; ++t)
      for (std::size_t i = 0; i < n; ++i) {
        Vec a = A.basis(i);
        Vec lhs = pa.alpha(s, pa.alpha(t, a));
        Vec rhs = A.multiply(pa.alpha(G.mul(s, t), a), pa.e(s));
        if (lhs != rhs) fail_once(rep, "compatibility", {ix(s), ix(t), ix(i)});
      }
  return rep;
}

ValidationReport validate_global_action(const GlobalActionInstance& ga) {
  const std::size_t n = ga.amb.dim();
  const PrimeField& f = ga.amb.field();
  if (ga.autos.size() != ga.grp.order) throw StructuralError("global action: need one automorphism per group element");
  for (std::size_t s = 0; s < ga.autos.size(); ++s) check_square(ga.autos[s], n, f, "automorphism " + std::to_string(s));

  ValidationReport rep;
  rep.merge(validate_algebra(ga.amb), "algebra.");
  rep.merge(validate_group(ga.grp), "group.");
  if (!rep.ok()) return rep;

  const FiniteAlgebra& S = ga.amb;
  for (std::size_t s = 0; s < ga.grp.order; ++s) {
    const Matrix& B = ga.autos[s];
    if (mat_vec(f, B, S.unit()) != S.unit()) fail_once(rep, "unital", {ix(s)});
    if (!inverse(f, B)) fail_once(rep, "invertible", {ix(s)});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mat_vec(f, B, S.product(i, j)) != S.multiply(B.column(i), B.column(j)))
          fail_once(rep, "multiplicative", {ix(s), ix(i), ix(j)});
  }
  if (ga.autos[ga.grp.id] != Matrix::identity(n)) fail_once(rep, "identity", {});
  for (std::size_t s = 0; s < ga.grp.order; ++s)
    for (std::size_t t = 0; t < ga.grp.order; ++t)
      if (mat_mul(f, ga.autos[s], ga.autos[t]) != ga.autos[ga.grp.mul(s, t)])
        fail_once(rep, "homomorphism", {ix(s), ix(t)});
  return rep;
}

Subalgebra invariants(const PartialAction& pa) {
  const FiniteAlgebra& A = pa.alg;
  const PrimeField& f = pa.field();
  std::vector<Matrix> conditions;
  for (std::size_t s = 0; s < pa.order(); ++s)
    conditions.push_back(mat_sub(f, pa.alpha_matrix(s), A.right_mult(pa.e(s))));
  Matrix ker = kernel(f, vstack(conditions));
  ValidationReport rep = validate_subalgebra(A, ker);
  if (!rep.ok()) throw std::logic_error("invariants are not a subalgebra: " + rep.summary());
  return Subalgebra{Subspace(f, ker)};
}

std::optional<std::pair<std::size_t, std::size_t>> first_moved(const PartialAction& pa, const Subalgebra& sub) {
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    Vec b = sub.element(i);
    for (std::size_t s = 0; s < pa.order(); ++s)
      if (pa.alpha(s, b) != pa.alg.multiply(b, pa.e(s))) return std::make_pair(i, s);
  }
  return std::nullopt;
}

Restriction restrict_global_action(const GlobalActionInstance& ga, const Vec& e) {
  ValidationReport rep = validate_global_action(ga);
  if (!rep.ok()) throw StructuralError("invalid global action: " + rep.summary());
  const FiniteAlgebra& S = ga.amb;
  const PrimeField& f = S.field();
  if (e.size() != S.dim()) throw StructuralError("restriction idempotent has wrong length");
  if (is_zero(e)) throw StructuralError("restriction idempotent is zero (zero ring)");
  if (!is_central_idempotent(S, e)) throw StructuralError("restriction idempotent is not a central idempotent");

  Subspace ideal = ideal_of(S, e);
  const std::size_t k = ideal.dim();
  FiniteAlgebra A = FiniteAlgebra::from_products(
      f, k, [&](std::size_t i, std::size_t j) { return ideal.coords(S.multiply(ideal.vector(i), ideal.vector(j))); },
      ideal.coords(e));

  const FiniteGroup& G = ga.grp;
  std::vector<Vec> ambient_idem(G.order);
  for (std::size_t s = 0; s < G.order; ++s) ambient_idem[s] = S.multiply(e, mat_vec(f, ga.autos[s], e));

  std::vector<Vec> idem;
  std::vector<Matrix> maps;
  for (std::size_t s = 0; s < G.order; ++s) {
    idem.push_back(ideal.coords(ambient_idem[s]));
    Matrix L(k, k);
    const Vec& dom = ambient_idem[G.inverse(s)];
    for (std::size_t j = 0; j < k; ++j) {
      Vec x = S.multiply(ideal.vector(j), dom);
      L.set_column(j, ideal.coords(S.multiply(mat_vec(f, ga.autos[s], x), ambient_idem[s])));
    }
    maps.push_back(std::move(L));
  }
  return Restriction{std::move(ideal), PartialAction{std::move(A), G, std::move(idem), std::move(maps)}};
}

BlockSpace idempotent_blocks(const PartialAction& pa) {
  std::vector<Subspace> blocks;
  for (std::size_t s = 0; s < pa.order(); ++s) blocks.push_back(ideal_of(pa.alg, pa.e(s)));
  return BlockSpace(pa.dim(), std::move(blocks));
}

SkewGroupRing skew_group_ring(const PartialAction& pa) {
  const FiniteAlgebra& A = pa.alg;
  if (!A.is_commutative()) throw StructuralError("skew group ring requires a commutative algebra");
  const PrimeField& f = pa.field();
  const FiniteGroup& G = pa.grp;
  const std::size_t n = A.dim();
  BlockSpace blocks = idempotent_blocks(pa);

  auto product = [&](std::size_t k1, std::size_t k2) {
    auto [s, a] = blocks.basis_element(k1);
    auto [t, b] = blocks.basis_element(k2);
    Vec c = pa.alpha(s, A.multiply(pa.alpha(G.inverse(s), a), b));
    Vec flat(blocks.flat_size(), 0);
    add_to_block(f, flat, G.mul(s, t), n, c);
    if (!blocks.contains(f, flat)) throw std::logic_error("skew product left its idempotent block");
    return blocks.coords(flat);
  };
  Vec unit_flat(blocks.flat_size(), 0);
  add_to_block(f, unit_flat, G.id, n, A.unit());
  FiniteAlgebra R = FiniteAlgebra::from_products(f, blocks.dim(), product, blocks.coords(unit_flat));
  return SkewGroupRing{std::move(R), std::move(blocks)};
}

}  // namespace pgalois
