#include "pgalois/group.hpp"

#include <string>

namespace pgalois {

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<std::size_t> table) {
  if (order == 0) throw StructuralError("group order must be at least 1");
  if (table.size() != order * order)
    throw StructuralError("Cayley table must have " + std::to_string(order * order) + " entries");
  for (auto v : table)
    if (v >= order) throw StructuralError("Cayley table entry out of range");

  FiniteGroup g;
  g.order = order;
  g.table = std::move(table);
  g.id = order;
  for (std::size_t e = 0; e < order && g.id == order; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) g.id = e;
  }
  g.inv.assign(order, order);
  if (g.id < order) {
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        if (g.mul(a, b) == g.id && g.mul(b, a) == g.id) {
          g.inv[a] = b;
          break;
        }
  }
  return g;
}

ValidationReport validate_group(const FiniteGroup& g) {
  ValidationReport rep;
  if (g.table.size() != g.order * g.order || g.inv.size() != g.order)
    throw StructuralError("group table shape mismatch");
  if (g.id >= g.order) {
    rep.fail("identity", {});
    return rep;
  }
  for (std::size_t a = 0; a < g.order; ++a) {
    if (g.mul(g.id, a) != a || g.mul(a, g.id) != a) {
      rep.fail("identity", {static_cast<std::int64_t>(a)});
      return rep;
    }
  }
  for (std::size_t a = 0; a < g.order; ++a) {
    std::size_t b = g.inv[a];
    if (b >= g.order || g.mul(a, b) != g.id || g.mul(b, a) != g.id) {
      rep.fail("inverse", {static_cast<std::int64_t>(a)});
      return rep;
    }
  }
  for (std::size_t a = 0; a < g.order; ++a)
    for (std::size_t b = 0; b < g.order; ++b)
      for (std::size_t c = 0; c < g.order; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          rep.fail("associativity", {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                     static_cast<std::int64_t>(c)});
          return rep;
        }
  return rep;
}

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return FiniteGroup::from_table(n, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t n = a.order * b.order;
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xa = x / b.order, xb = x % b.order;
      std::size_t ya = y / b.order, yb = y % b.order;
      t[x * n + y] = a.mul(xa, ya) * b.order + b.mul(xb, yb);
    }
  return FiniteGroup::from_table(n, std::move(t));
}

FiniteGroup klein_four_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

}  // namespace pgalois
