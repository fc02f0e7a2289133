#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgalois/comodule.hpp"
#include "pgalois/partial_action.hpp"

namespace pgalois::cli {

/// A failure to read an instance. `syntax` covers malformed JSON; every
/// other problem is semantic and carries a JSON pointer to the field.
class InstanceError : public std::runtime_error {
 public:
  enum class Kind { syntax, semantic };
  InstanceError(Kind kind, std::string pointer, const std::string& message);
  Kind kind;
  std::string pointer;
};

struct PartialActionData {
  std::vector<Vec> idempotents;
  std::vector<Matrix> alpha_matrices;
};

struct GlobalActionData {
  std::vector<Matrix> automorphisms;
  Vec restriction;
};

struct ModuleEntry {
  ModuleRep mod;
  std::optional<std::vector<Matrix>> descent;
};

struct InstanceDocument {
  std::uint64_t prime = 2;
  FiniteAlgebra algebra{PrimeField(2), 1, {1}, {1}};
  FiniteGroup group;
  std::optional<PartialActionData> partial;
  std::optional<GlobalActionData> global;
  std::optional<Matrix> subring;   // rows are basis vectors of B
  std::vector<ModuleEntry> modules;
};

InstanceDocument parse_instance(const std::string& text);
/// Canonical text: key-sorted JSON, two-space indent, trailing newline.
std::string emit_instance(const InstanceDocument& doc);

/// A standalone instance carrying the partial action directly.
InstanceDocument document_from_action(const PartialAction& pa);

/// The partial action of the document, restricting the global action when
/// that is what the document holds. Invalid data raise InstanceError.
PartialAction resolve_action(const InstanceDocument& doc);

/// Subring basis rows read from a file of the form {"basis": [...]}.
Matrix parse_subring(const std::string& text, std::size_t dim, std::uint64_t prime);

}  // namespace pgalois::cli
