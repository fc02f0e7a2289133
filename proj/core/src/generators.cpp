#include "pgalois/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace pgalois {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::size_t block_dim_of(BlockKind k) {
  switch (k) {
    case BlockKind::field: return 1;
    case BlockKind::dual_numbers: return 2;
    case BlockKind::matrices: return 4;
  }
  return 1;
}

const char* kind_name(BlockKind k) {
  switch (k) {
    case BlockKind::field: return "F_p";
    case BlockKind::dual_numbers: return "F_p[x]/(x^2)";
    case BlockKind::matrices: return "M_2(F_p)";
  }
  return "?";
}

// Product of basis elements i, j of K.
Vec block_product(BlockKind k, std::size_t i, std::size_t j) {
  switch (k) {
    case BlockKind::field: return {1};
    case BlockKind::dual_numbers: {
      Vec v(2, 0);
      if (i + j < 2) v[i + j] = 1;
      return v;
    }
    case BlockKind::matrices: {
      // E_ab E_cd = [b == c] E_ad, with E_ab at index 2a + b.
      Vec v(4, 0);
      if (i % 2 == j / 2) v[2 * (i / 2) + j % 2] = 1;
      return v;
    }
  }
  return {};
}

Vec block_unit(BlockKind k) {
  switch (k) {
    case BlockKind::field: return {1};
    case BlockKind::dual_numbers: return {1, 0};
    case BlockKind::matrices: return {1, 0, 0, 1};
  }
  return {};
}

FiniteAlgebra block_power(const PrimeField& f, BlockKind k, std::size_t m) {
  const std::size_t kd = block_dim_of(k);
  const std::size_t n = kd * m;
  Vec unit;
  for (std::size_t b = 0; b < m; ++b) {
    Vec u = block_unit(k);
    unit.insert(unit.end(), u.begin(), u.end());
  }
  return FiniteAlgebra::from_products(
      f, n,
      [&](std::size_t i, std::size_t j) {
        Vec v(n, 0);
        if (i / kd != j / kd) return v;
        Vec p = block_product(k, i % kd, j % kd);
        for (std::size_t t = 0; t < kd; ++t) v[(i / kd) * kd + t] = p[t];
        return v;
      },
      unit);
}

using Mat2 = std::array<Residue, 4>;   // row-major 2x2

Mat2 mul2(const PrimeField& f, const Mat2& a, const Mat2& b) {
  return {f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
          f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
}

Mat2 inv2(const PrimeField& f, const Mat2& a) {
  Residue det = f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]));
  Residue d = f.inv(det);
  return {f.mul(a[3], d), f.mul(f.neg(a[1]), d), f.mul(f.neg(a[2]), d), f.mul(a[0], d)};
}

// Matrix of X |-> P X P^-1 on M_2 coordinates.
Matrix conjugation(const PrimeField& f, const Mat2& p) {
  Mat2 pi = inv2(f, p);
  Matrix m(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    Mat2 e{0, 0, 0, 0};
    e[k] = 1;
    Mat2 image = mul2(f, mul2(f, p, e), pi);
    m.set_column(k, Vec(image.begin(), image.end()));
  }
  return m;
}

const std::vector<Mat2>& conjugators() {
  static const std::vector<Mat2> c{{1, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 1}};
  return c;
}

// Automorphisms of K to draw twists from; the first one is the identity.
std::vector<Matrix> block_automorphisms(const PrimeField& f, BlockKind k) {
  const std::size_t kd = block_dim_of(k);
  std::vector<Matrix> autos{Matrix::identity(kd)};
  if (k == BlockKind::dual_numbers) {
    for (Residue c = 2; c < f.modulus(); ++c) {
      Matrix m = Matrix::identity(2);
      m(1, 1) = c;
      autos.push_back(m);
    }
  } else if (k == BlockKind::matrices) {
    for (const Mat2& p : conjugators()) autos.push_back(conjugation(f, p));
  }
  return autos;
}

std::vector<std::vector<std::size_t>> subgroups(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << g.order); ++mask) {
    if (!(mask >> g.id & 1)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < g.order && closed; ++a)
      for (std::size_t b = 0; b < g.order && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> g.mul(a, b) & 1)) closed = false;
    if (!closed) continue;
    std::vector<std::size_t> h;
    for (std::size_t a = 0; a < g.order; ++a)
      if (mask >> a & 1) h.push_back(a);
    out.push_back(std::move(h));
  }
  return out;
}

// Left cosets of h, as the permutation action of every group element.
std::vector<std::vector<std::size_t>> coset_action(const FiniteGroup& g, const std::vector<std::size_t>& h) {
  std::vector<std::size_t> label(g.order, g.order);
  std::size_t count = 0;
  for (std::size_t x = 0; x < g.order; ++x) {
    if (label[x] != g.order) continue;
    for (std::size_t y : h) label[g.mul(x, y)] = count;
    ++count;
  }
  std::vector<std::size_t> rep(count);
  for (std::size_t x = g.order; x-- > 0;) rep[label[x]] = x;
  std::vector<std::vector<std::size_t>> act(g.order, std::vector<std::size_t>(count));
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t c = 0; c < count; ++c) act[a][c] = label[g.mul(a, rep[c])];
  return act;
}

// Homomorphisms G -> Aut(K) realized through a finite list of automorphisms:
// characters to F_p^* for dual numbers, G -> Z/2 through a fixed involution
// for matrices.
std::vector<std::vector<Matrix>> twist_homomorphisms(const PrimeField& f, const FiniteGroup& g, BlockKind k) {
  const std::size_t kd = block_dim_of(k);
  std::vector<std::vector<Matrix>> out;
  out.push_back(std::vector<Matrix>(g.order, Matrix::identity(kd)));
  if (k == BlockKind::field) return out;
  const std::size_t values = k == BlockKind::dual_numbers ? f.modulus() - 1 : 2;
  std::vector<std::size_t> chi(g.order, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < g.order; ++i) total *= values;
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < g.order; ++i) {
      chi[i] = c % values;
      c /= values;
    }
    auto value = [&](std::size_t i) -> Residue {
      return k == BlockKind::dual_numbers ? static_cast<Residue>(chi[i] + 1) : static_cast<Residue>(chi[i]);
    };
    bool hom = true;
    for (std::size_t a = 0; a < g.order && hom; ++a)
      for (std::size_t b = 0; b < g.order && hom; ++b) {
        if (k == BlockKind::dual_numbers)
          hom = f.mul(value(a), value(b)) == value(g.mul(a, b));
        else
          hom = (value(a) + value(b)) % 2 == value(g.mul(a, b));
      }
    if (!hom) continue;
    std::vector<Matrix> twist;
    for (std::size_t a = 0; a < g.order; ++a) {
      if (k == BlockKind::dual_numbers) {
        Matrix m = Matrix::identity(2);
        m(1, 1) = value(a);
        twist.push_back(m);
      } else {
        twist.push_back(value(a) ? conjugation(f, {0, 1, 1, 0}) : Matrix::identity(4));
      }
    }
    out.push_back(std::move(twist));
  }
  return out;
}

std::string group_name(std::size_t index) {
  static const char* names[] = {"1", "Z2", "Z3", "Z4", "Z2xZ2"};
  return names[index];
}

}  // namespace

std::vector<FiniteGroup> generator_groups() {
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four_group()};
}

RandomInstance random_restricted_action(std::mt19937_64& rng, const GeneratorOptions& options) {
  const std::uint64_t p = options.primes[pick(rng, options.primes.size())];
  PrimeField f(p);
  std::vector<FiniteGroup> groups = generator_groups();
  const std::size_t gi = pick(rng, groups.size());
  const FiniteGroup& G = groups[gi];

  std::vector<BlockKind> kinds{BlockKind::field, BlockKind::field, BlockKind::dual_numbers};
  if (options.allow_noncommutative && options.max_dim >= 4) kinds.push_back(BlockKind::matrices);
  BlockKind kind = kinds[pick(rng, kinds.size())];
  const std::size_t kd = block_dim_of(kind);
  const std::size_t capacity = options.max_dim / kd;

  std::vector<std::vector<std::size_t>> subs = subgroups(G);
  std::vector<std::vector<std::vector<std::size_t>>> orbits;
  std::size_t m = 0;
  std::ostringstream orbit_desc;
  while (true) {
    std::vector<std::size_t> fits;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::size_t size = G.order / subs[i].size();
      if (m + size <= capacity && (kind != BlockKind::matrices || size == 1)) fits.push_back(i);
    }
    if (fits.empty() || (m > 0 && pick(rng, 2) == 0)) break;
    const auto& h = subs[fits[pick(rng, fits.size())]];
    orbits.push_back(coset_action(G, h));
    orbit_desc << (orbits.size() > 1 ? "," : "") << "G/" << h.size();
    m += G.order / h.size();
  }

  std::vector<std::vector<Matrix>> twists = twist_homomorphisms(f, G, kind);
  const std::vector<Matrix>& twist = twists[pick(rng, twists.size())];

  // beta_g sends block j of K^m to block g.j through twist[g].
  std::vector<std::vector<std::size_t>> perm(G.order, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < G.order; ++a) {
    std::size_t offset = 0;
    for (const auto& orbit : orbits) {
      for (std::size_t c = 0; c < orbit[a].size(); ++c) perm[a][offset + c] = offset + orbit[a][c];
      offset += orbit[a].size();
    }
  }
  std::vector<Matrix> autos;
  for (std::size_t a = 0; a < G.order; ++a) {
    Matrix beta(m * kd, m * kd);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < kd; ++r)
        for (std::size_t c = 0; c < kd; ++c) beta(perm[a][j] * kd + r, j * kd + c) = twist[a](r, c);
    autos.push_back(std::move(beta));
  }

  GlobalActionInstance global{block_power(f, kind, m), G, std::move(autos)};
  const std::size_t mask = 1 + pick(rng, (std::size_t{1} << m) - 1);
  Vec e(m * kd, 0);
  Vec u = block_unit(kind);
  for (std::size_t j = 0; j < m; ++j)
    if (mask >> j & 1)
      for (std::size_t r = 0; r < kd; ++r) e[j * kd + r] = u[r];

  Restriction res = restrict_global_action(global, e);
  ValidationReport rep = validate_partial_action(res.action);
  if (!rep.ok()) throw std::logic_error("restricted action is invalid: " + rep.summary());

  std::ostringstream desc;
  desc << "p=" << p << " G=" << group_name(gi) << " K=" << kind_name(kind) << " m=" << m << " orbits=["
       << orbit_desc.str() << "] e_mask=" << mask;
  return RandomInstance{desc.str(), kind, kd, std::move(global), std::move(e), std::move(res.action)};
}

std::optional<Mutation> mutate_compatibility(const RandomInstance& inst, std::mt19937_64& rng) {
  const PartialAction& pa = inst.action;
  const PrimeField& f = pa.field();
  const std::size_t kd = inst.block_dim;
  const std::size_t r = pa.dim() / kd;
  std::vector<Matrix> autos = block_automorphisms(f, inst.kind);

  std::vector<std::size_t> elements(pa.order());
  std::iota(elements.begin(), elements.end(), 0);
  std::shuffle(elements.begin(), elements.end(), rng);
  for (std::size_t s : elements) {
    if (s == pa.grp.id) continue;
    const Vec& dom = pa.e(pa.grp.inverse(s));
    std::vector<std::size_t> blocks;
    for (std::size_t b = 0; b < r; ++b)
      if (!is_zero(Vec(dom.begin() + static_cast<std::ptrdiff_t>(b * kd),
                       dom.begin() + static_cast<std::ptrdiff_t>((b + 1) * kd))))
        blocks.push_back(b);
    if (blocks.empty() || (blocks.size() == 1 && autos.size() == 1)) continue;

    for (int attempt = 0; attempt < 16; ++attempt) {
      std::vector<std::size_t> target = blocks;
      std::shuffle(target.begin(), target.end(), rng);
      // Domain block blocks[i] goes to block target[i] through a K-automorphism.
      Matrix gamma = Matrix::identity(pa.dim());
      for (std::size_t b : blocks)
        for (std::size_t x = 0; x < kd; ++x) gamma(b * kd + x, b * kd + x) = 0;
      bool nontrivial = false;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::size_t chosen = pick(rng, autos.size());
        nontrivial = nontrivial || chosen != 0 || target[i] != blocks[i];
        for (std::size_t x = 0; x < kd; ++x)
          for (std::size_t y = 0; y < kd; ++y) gamma(target[i] * kd + x, blocks[i] * kd + y) = autos[chosen](x, y);
      }
      if (!nontrivial) continue;

      PartialAction mutated = pa;
      mutated.maps[s] = mat_mul(f, pa.maps[s], gamma);
      ValidationReport rep = validate_partial_action(mutated);
      if (rep.ok()) continue;
      bool only_compat = std::all_of(rep.failures().begin(), rep.failures().end(),
                                     [](const Failure& x) { return x.condition == "compatibility"; });
      if (!only_compat) continue;
      std::ostringstream desc;
      desc << inst.description << " twist at s=" << s;
      return Mutation{std::move(mutated), s, desc.str()};
    }
  }
  return std::nullopt;
}

Mutation random_mutation(std::mt19937_64& rng, const GeneratorOptions& options) {
  while (true) {
    RandomInstance inst = random_restricted_action(rng, options);
    if (auto m = mutate_compatibility(inst, rng)) return std::move(*m);
  }
}

}  // namespace pgalois
