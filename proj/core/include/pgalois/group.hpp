#pragma once

#include <cstddef>
#include <vector>

#include "pgalois/report.hpp"

namespace pgalois {

/// A finite group given by its Cayley table on indices 0..order-1.
struct FiniteGroup {
  std::size_t order = 0;
  std::vector<std::size_t> table;   // table[a * order + b] = a*b
  std::size_t id = 0;
  std::vector<std::size_t> inv;

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * order + b]; }
  std::size_t inverse(std::size_t a) const { return inv[a]; }

  /// Reads identity and inverses off the table. Shape problems throw
  /// StructuralError; a missing identity or inverse is left for
  /// validate_group to report (id == order, inv[a] == order).
  static FiniteGroup from_table(std::size_t order, std::vector<std::size_t> table);
};

/// Failures: "identity", "inverse" (witness a), "associativity" (a, b, c).
ValidationReport validate_group(const FiniteGroup& g);

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup klein_four_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace pgalois
