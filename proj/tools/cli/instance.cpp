#include "cli/instance.hpp"

#include <set>

#include "json.hpp"

namespace pgalois::cli {

using nlohmann::json;

InstanceError::InstanceError(Kind k, std::string p, const std::string& message)
    : std::runtime_error(p.empty() ? message : p + ": " + message), kind(k), pointer(std::move(p)) {}

namespace {

[[noreturn]] void semantic(const std::string& pointer, const std::string& message) {
  throw InstanceError(InstanceError::Kind::semantic, pointer, message);
}

void only_keys(const json& obj, const std::string& ptr, const std::set<std::string>& allowed) {
  if (!obj.is_object()) semantic(ptr, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) semantic(ptr + "/" + key, "unknown field");
}

const json& need(const json& obj, const std::string& ptr, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) semantic(ptr + "/" + key, "missing field");
  return *it;
}

std::uint64_t count(const json& v, const std::string& ptr) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    semantic(ptr, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

Vec vec(const json& v, const std::string& ptr, std::size_t len, std::uint64_t p) {
  if (!v.is_array()) semantic(ptr, "expected an array");
  if (v.size() != len) semantic(ptr, "expected length " + std::to_string(len));
  Vec out;
  for (std::size_t i = 0; i < len; ++i) {
    std::string at = ptr + "/" + std::to_string(i);
    std::uint64_t x = count(v[i], at);
    if (x >= p) semantic(at, "entry not reduced mod p");
    out.push_back(static_cast<Residue>(x));
  }
  return out;
}

Matrix matrix(const json& v, const std::string& ptr, std::size_t rows, std::size_t cols, std::uint64_t p) {
  if (!v.is_array()) semantic(ptr, "expected an array of rows");
  if (v.size() != rows) semantic(ptr, "expected " + std::to_string(rows) + " rows");
  std::vector<Vec> r;
  for (std::size_t i = 0; i < rows; ++i) r.push_back(vec(v[i], ptr + "/" + std::to_string(i), cols, p));
  return Matrix::from_rows(r, cols);
}

std::vector<Matrix> matrices(const json& v, const std::string& ptr, std::size_t count_, std::size_t n,
                             std::uint64_t p) {
  if (!v.is_array()) semantic(ptr, "expected an array of matrices");
  if (v.size() != count_) semantic(ptr, "expected " + std::to_string(count_) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count_; ++i) out.push_back(matrix(v[i], ptr + "/" + std::to_string(i), n, n, p));
  return out;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (Residue x : v) a.push_back(x);
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row_vec(i)));
  return a;
}

json matrices_json(const std::vector<Matrix>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(matrix_json(m));
  return a;
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(InstanceError::Kind::syntax, "", e.what());
  }
  only_keys(root, "", {"prime", "algebra", "group", "partial_action", "global_action", "subring", "modules"});

  InstanceDocument doc;
  doc.prime = count(need(root, "", "prime"), "/prime");
  if (!PrimeField::is_prime(doc.prime)) semantic("/prime", "modulus not prime");
  PrimeField f(doc.prime);
  const std::uint64_t p = doc.prime;

  const json& alg = need(root, "", "algebra");
  only_keys(alg, "/algebra", {"dim", "unit", "structure_constants"});
  const std::size_t n = count(need(alg, "/algebra", "dim"), "/algebra/dim");
  if (n == 0) semantic("/algebra/dim", "zero ring");
  Vec unit = vec(need(alg, "/algebra", "unit"), "/algebra/unit", n, p);
  const json& sc = need(alg, "/algebra", "structure_constants");
  if (!sc.is_array() || sc.size() != n) semantic("/algebra/structure_constants", "expected dim x dim x dim array");
  std::vector<Residue> constants;
  for (std::size_t i = 0; i < n; ++i) {
    std::string row = "/algebra/structure_constants/" + std::to_string(i);
    if (!sc[i].is_array() || sc[i].size() != n) semantic(row, "expected dim entries");
    for (std::size_t j = 0; j < n; ++j) {
      Vec prod = vec(sc[i][j], row + "/" + std::to_string(j), n, p);
      constants.insert(constants.end(), prod.begin(), prod.end());
    }
  }
  try {
    doc.algebra = FiniteAlgebra(f, n, std::move(constants), std::move(unit));
  } catch (const StructuralError& e) {
    semantic("/algebra", e.what());
  }

  const json& grp = need(root, "", "group");
  only_keys(grp, "/group", {"order", "table"});
  const std::size_t g = count(need(grp, "/group", "order"), "/group/order");
  if (g == 0) semantic("/group/order", "empty group");
  const json& table = need(grp, "/group", "table");
  if (!table.is_array() || table.size() != g) semantic("/group/table", "expected order x order table");
  std::vector<std::size_t> flat;
  for (std::size_t a = 0; a < g; ++a) {
    std::string row = "/group/table/" + std::to_string(a);
    if (!table[a].is_array() || table[a].size() != g) semantic(row, "expected order entries");
    for (std::size_t b = 0; b < g; ++b) {
      std::uint64_t x = count(table[a][b], row + "/" + std::to_string(b));
      if (x >= g) semantic(row + "/" + std::to_string(b), "group element out of range");
      flat.push_back(x);
    }
  }
  try {
    doc.group = FiniteGroup::from_table(g, std::move(flat));
  } catch (const StructuralError& e) {
    semantic("/group/table", e.what());
  }
  ValidationReport grep = validate_group(doc.group);
  if (!grep.ok()) semantic("/group/table", "not a group: " + grep.summary());

  const bool has_partial = root.contains("partial_action");
  const bool has_global = root.contains("global_action");
  if (has_partial == has_global) semantic("", "exactly one of partial_action or global_action is required");
  if (has_partial) {
    const json& pa = root["partial_action"];
    only_keys(pa, "/partial_action", {"idempotents", "alpha_matrices"});
    const json& idem = need(pa, "/partial_action", "idempotents");
    if (!idem.is_array() || idem.size() != g) semantic("/partial_action/idempotents", "expected one per group element");
    PartialActionData d;
    for (std::size_t s = 0; s < g; ++s)
      d.idempotents.push_back(vec(idem[s], "/partial_action/idempotents/" + std::to_string(s), n, p));
    d.alpha_matrices =
        matrices(need(pa, "/partial_action", "alpha_matrices"), "/partial_action/alpha_matrices", g, n, p);
    doc.partial = std::move(d);
  } else {
    const json& ga = root["global_action"];
    only_keys(ga, "/global_action", {"automorphism_matrices", "restriction_idempotent"});
    GlobalActionData d;
    d.automorphisms = matrices(need(ga, "/global_action", "automorphism_matrices"),
                               "/global_action/automorphism_matrices", g, n, p);
    d.restriction =
        vec(need(ga, "/global_action", "restriction_idempotent"), "/global_action/restriction_idempotent", n, p);
    doc.global = std::move(d);
  }

  if (root.contains("subring")) {
    const json& sub = root["subring"];
    only_keys(sub, "/subring", {"basis"});
    const json& basis = need(sub, "/subring", "basis");
    // Subring coordinates refer to the algebra the action lives on, which
    // for a global instance is the restricted one; its size is checked later.
    if (!basis.is_array() || basis.empty()) semantic("/subring/basis", "expected a nonempty array of vectors");
    std::size_t width = basis[0].is_array() ? basis[0].size() : 0;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < basis.size(); ++i)
      rows.push_back(vec(basis[i], "/subring/basis/" + std::to_string(i), width, p));
    doc.subring = Matrix::from_rows(rows, width);
  }

  if (root.contains("modules")) {
    const json& mods = root["modules"];
    if (!mods.is_array()) semantic("/modules", "expected an array");
    for (std::size_t i = 0; i < mods.size(); ++i) {
      std::string ptr = "/modules/" + std::to_string(i);
      only_keys(mods[i], ptr, {"dim", "side", "action_matrices", "descent_matrices"});
      ModuleEntry e;
      e.mod.dim = count(need(mods[i], ptr, "dim"), ptr + "/dim");
      const json& side = need(mods[i], ptr, "side");
      if (side == "right")
        e.mod.side = Side::right;
      else if (side == "left")
        e.mod.side = Side::left;
      else
        semantic(ptr + "/side", "expected \"left\" or \"right\"");
      // Action matrices are indexed by the basis of the acting algebra A.
      e.mod.act = matrices(need(mods[i], ptr, "action_matrices"), ptr + "/action_matrices",
                           doc.partial ? n : need(mods[i], ptr, "action_matrices").size(), e.mod.dim, p);
      if (mods[i].contains("descent_matrices"))
        e.descent = matrices(mods[i]["descent_matrices"], ptr + "/descent_matrices", g, e.mod.dim, p);
      doc.modules.push_back(std::move(e));
    }
  }
  return doc;
}

std::string emit_instance(const InstanceDocument& doc) {
  json root;
  root["prime"] = doc.prime;
  const std::size_t n = doc.algebra.dim();
  json sc = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(vec_json(doc.algebra.product(i, j)));
    sc.push_back(row);
  }
  root["algebra"] = {{"dim", n}, {"unit", vec_json(doc.algebra.unit())}, {"structure_constants", sc}};
  json table = json::array();
  for (std::size_t a = 0; a < doc.group.order; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < doc.group.order; ++b) row.push_back(doc.group.mul(a, b));
    table.push_back(row);
  }
  root["group"] = {{"order", doc.group.order}, {"table", table}};
  if (doc.partial) {
    json idem = json::array();
    for (const auto& e : doc.partial->idempotents) idem.push_back(vec_json(e));
    root["partial_action"] = {{"idempotents", idem}, {"alpha_matrices", matrices_json(doc.partial->alpha_matrices)}};
  }
  if (doc.global)
    root["global_action"] = {{"automorphism_matrices", matrices_json(doc.global->automorphisms)},
                             {"restriction_idempotent", vec_json(doc.global->restriction)}};
  if (doc.subring) root["subring"] = {{"basis", matrix_json(*doc.subring)}};
  if (!doc.modules.empty()) {
    json mods = json::array();
    for (const auto& m : doc.modules) {
      json entry = {{"dim", m.mod.dim},
                    {"side", m.mod.side == Side::right ? "right" : "left"},
                    {"action_matrices", matrices_json(m.mod.act)}};
      if (m.descent) entry["descent_matrices"] = matrices_json(*m.descent);
      mods.push_back(entry);
    }
    root["modules"] = mods;
  }
  return root.dump(2) + "\n";
}

InstanceDocument document_from_action(const PartialAction& pa) {
  InstanceDocument doc;
  doc.prime = pa.field().modulus();
  doc.algebra = pa.alg;
  doc.group = pa.grp;
  doc.partial = PartialActionData{pa.idem, pa.maps};
  return doc;
}

PartialAction resolve_action(const InstanceDocument& doc) {
  ValidationReport arep = validate_algebra(doc.algebra);
  if (!arep.ok()) semantic("/algebra", "not a unital associative algebra: " + arep.summary());
  auto build = [&]() -> PartialAction {
    if (doc.partial)
      return PartialAction{doc.algebra, doc.group, doc.partial->idempotents, doc.partial->alpha_matrices};
    GlobalActionInstance ga{doc.algebra, doc.group, doc.global->automorphisms};
    ValidationReport grep = validate_global_action(ga);
    if (!grep.ok()) semantic("/global_action", "not a global action: " + grep.summary());
    try {
      return restrict_global_action(ga, doc.global->restriction).action;
    } catch (const StructuralError& e) {
      semantic("/global_action/restriction_idempotent", e.what());
    }
  };
  PartialAction pa = build();
  if (doc.subring && doc.subring->cols() != pa.dim()) semantic("/subring/basis", "vectors must have length dim A");
  for (std::size_t i = 0; i < doc.modules.size(); ++i)
    if (doc.modules[i].mod.act.size() != pa.dim())
      semantic("/modules/" + std::to_string(i) + "/action_matrices", "expected one matrix per basis element of A");
  return pa;
}

Matrix parse_subring(const std::string& text, std::size_t dim, std::uint64_t prime) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceError(InstanceError::Kind::syntax, "", e.what());
  }
  only_keys(root, "", {"basis"});
  const json& basis = need(root, "", "basis");
  if (!basis.is_array() || basis.empty()) semantic("/basis", "expected a nonempty array of vectors");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < basis.size(); ++i) rows.push_back(vec(basis[i], "/basis/" + std::to_string(i), dim, prime));
  return Matrix::from_rows(rows, dim);
}

}  // namespace pgalois::cli
