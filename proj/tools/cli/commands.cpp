#include "cli/commands.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "pgalois/comodule.hpp"
#include "pgalois/coring.hpp"
#include "pgalois/dual.hpp"
#include "pgalois/fixtures.hpp"
#include "pgalois/morita.hpp"

namespace pgalois::cli {

namespace {

using Witness = std::vector<std::int64_t>;

bool check_action(const PartialAction& pa, ReportDocument& rep) {
  ValidationReport r = validate_partial_action(pa);
  rep.verdicts["partial_action_valid"] = r.ok();
  rep.add_failures("partial_action", r);
  return r.ok();
}

Subalgebra base_ring(const PartialAction& pa, const InstanceDocument& doc, const CommandOptions& options) {
  std::optional<Matrix> rows;
  std::string where = "/subring/basis";
  if (options.subring_text) {
    rows = parse_subring(*options.subring_text, pa.dim(), doc.prime);
    where = "--subring:/basis";
  } else if (doc.subring) {
    rows = doc.subring;
  }
  if (!rows) return invariants(pa);
  ValidationReport r = validate_subalgebra(pa.alg, *rows);
  if (!r.ok()) throw InstanceError(InstanceError::Kind::semantic, where, "not a unital subalgebra: " + r.summary());
  return make_subalgebra(pa.alg, *rows);
}

void not_invariant(ReportDocument& rep, const NotInvariantError& e) {
  rep.verdicts["base_in_invariants"] = false;
  rep.witnesses["moved_basis_element"] = {static_cast<std::int64_t>(e.basis_index),
                                          static_cast<std::int64_t>(e.group_element)};
}

void cmd_validate(const PartialAction& pa, const InstanceDocument& doc, ReportDocument& rep) {
  const bool valid = check_action(pa, rep);
  rep.dimensions["algebra"] = pa.dim();
  rep.dimensions["group"] = pa.order();
  if (valid) {
    Coring c = build_coring(pa);
    rep.dimensions["coring"] = c.dim();
    ValidationReport axioms = check_coring_axioms(c);
    rep.verdicts["coring_axioms"] = axioms.ok();
    rep.add_failures("coring", axioms);
    try {
      grouplike(c);
      rep.verdicts["grouplike"] = true;
    } catch (const std::logic_error&) {
      rep.verdicts["grouplike"] = false;
    }
  }
  for (std::size_t i = 0; i < doc.modules.size(); ++i) {
    const ModuleEntry& m = doc.modules[i];
    const std::string name = "module_" + std::to_string(i);
    ValidationReport mr = validate_module(pa.alg, m.mod);
    rep.verdicts[name + ".valid"] = mr.ok();
    rep.add_failures(name, mr);
    if (!m.descent || !valid || !mr.ok()) continue;
    if (m.mod.side != Side::right)
      throw InstanceError(InstanceError::Kind::semantic, "/modules/" + std::to_string(i) + "/side",
                          "descent data live on right modules");
    DescentDatum dd{m.mod, *m.descent};
    ValidationReport dr = validate_descent_datum(pa, dd);
    rep.verdicts[name + ".descent_valid"] = dr.ok();
    rep.add_failures(name + ".descent", dr);
    if (!dr.ok()) continue;
    Coaction rho = datum_to_coaction(pa, dd);
    ValidationReport cr = check_coaction(pa, m.mod, rho);
    rep.verdicts[name + ".coaction_valid"] = cr.ok();
    rep.add_failures(name + ".coaction", cr);
    rep.verdicts[name + ".round_trip"] = cr.ok() && coaction_to_datum(pa, m.mod, rho).maps == dd.maps;
    rep.dimensions[name + ".coinvariants"] = coinvariants(pa, dd).dim();
  }
}

void cmd_galois(const PartialAction& pa, const InstanceDocument& doc, const CommandOptions& options,
                ReportDocument& rep) {
  if (!check_action(pa, rep)) return;
  Subalgebra sub = base_ring(pa, doc, options);
  rep.dimensions["base"] = sub.dim();
  try {
    GaloisVerdict v = canonical_map(pa, sub);
    rep.verdicts["base_in_invariants"] = true;
    rep.verdicts["can_bijective"] = v.bijective;
    rep.verdicts["coring_morphism"] = v.coring_morphism_ok;
    rep.dimensions["source"] = v.source_dim;
    rep.dimensions["target"] = v.target_dim;
  } catch (const NotInvariantError& e) {
    not_invariant(rep, e);
  }
}

void cmd_dual(const PartialAction& pa, ReportDocument& rep) {
  if (!check_action(pa, rep)) return;
  rep.dimensions["dual_ring"] = dual_ring(pa).algebra.dim();
  ValidationReport r = check_dual_ring(pa);
  rep.verdicts["dual_ring"] = r.ok();
  rep.add_failures("dual", r);
  if (pa.alg.is_commutative()) {
    ValidationReport s = dual_vs_skew(pa);
    rep.verdicts["skew_anti_isomorphic"] = s.ok();
    rep.add_failures("skew", s);
  }
}

void cmd_frobenius(const PartialAction& pa, ReportDocument& rep) {
  if (!check_action(pa, rep)) return;
  ValidationReport r = frobenius_check(pa);
  rep.verdicts["frobenius"] = r.ok();
  rep.add_failures("frobenius", r);
  rep.dimensions["generators"] = dual_generators(pa).size();
}

void cmd_morita(const PartialAction& pa, ReportDocument& rep) {
  if (!check_action(pa, rep)) return;
  MoritaContext ctx = morita_context(pa);
  rep.verdicts["context"] = ctx.report.ok();
  rep.add_failures("morita", ctx.report);
  rep.dimensions["invariants"] = ctx.invariants.dim();
  rep.dimensions["dual_ring"] = ctx.dual.algebra.dim();
  std::optional<Vec> w = tau_surjectivity(pa);
  const bool mu = mu_surjectivity(pa);
  rep.verdicts["tau_surjective"] = w.has_value();
  rep.verdicts["tau_span_agrees"] = w.has_value() == tau_span_is_invariants(pa);
  rep.verdicts["mu_surjective"] = mu;
  rep.verdicts["strict"] = w.has_value() && mu;
  if (w) rep.witnesses["tau_witness"] = Witness(w->begin(), w->end());
}

void cmd_dashboard(const PartialAction& pa, const InstanceDocument& doc, const CommandOptions& options,
                   ReportDocument& rep) {
  if (!check_action(pa, rep)) return;
  Subalgebra sub = base_ring(pa, doc, options);
  rep.dimensions["base"] = sub.dim();
  try {
    Dashboard d = theorem_dashboard(pa, sub);
    rep.verdicts["base_in_invariants"] = true;
    rep.verdicts["(1a)"] = d.can_bijective;
    rep.verdicts["progenerator"] = d.progenerator;
    rep.verdicts["(1)"] = d.cond1;
    rep.verdicts["star_can_bijective"] = d.star_can_bijective;
    rep.verdicts["(2)"] = d.cond2;
    rep.verdicts["base_is_invariants"] = d.base_is_invariants;
    rep.verdicts["tau_surjective"] = d.tau_surjective;
    rep.verdicts["mu_surjective"] = d.mu_surjective;
    rep.verdicts["(3)"] = d.cond3;
    rep.verdicts["probes_bijective"] = d.probes_bijective;
    rep.verdicts["(4-probe)"] = d.cond4_probe;
    rep.verdicts["consistent"] = d.consistent();
    for (std::size_t i = 0; i < d.inconsistencies.size(); ++i)
      rep.witnesses["inconsistency." + d.inconsistencies[i]] = {static_cast<std::int64_t>(i)};
  } catch (const NotInvariantError& e) {
    not_invariant(rep, e);
  }
}

}  // namespace

bool is_report_command(const std::string& command) {
  return command == "validate" || command == "galois" || command == "dual" || command == "frobenius" ||
         command == "morita" || command == "dashboard";
}

ReportDocument run(const std::string& command, const InstanceDocument& doc, const CommandOptions& options) {
  if (!is_report_command(command)) throw UsageError("unknown command: " + command);
  auto start = std::chrono::steady_clock::now();
  PartialAction pa = resolve_action(doc);
  ReportDocument rep;
  rep.command = command;
  if (command == "validate")
    cmd_validate(pa, doc, rep);
  else if (command == "galois")
    cmd_galois(pa, doc, options, rep);
  else if (command == "dual")
    cmd_dual(pa, rep);
  else if (command == "frobenius")
    cmd_frobenius(pa, rep);
  else if (command == "morita")
    cmd_morita(pa, rep);
  else
    cmd_dashboard(pa, doc, options, rep);
  if (options.timing) {
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    rep.timing = std::map<std::string, double>{{"total_ms", ms.count()}};
  }
  return rep;
}

int exit_code(const ReportDocument& rep) {
  if (rep.command == "dashboard") {
    auto it = rep.verdicts.find("consistent");
    if (it != rep.verdicts.end() && !it->second) return 2;
  }
  return rep.all_true() ? 0 : 1;
}

std::string generate(const InstanceDocument& doc) {
  PartialAction pa = resolve_action(doc);
  InstanceDocument out = document_from_action(pa);
  out.prime = doc.prime;
  out.subring = doc.subring;
  out.modules = doc.modules;
  return emit_instance(out);
}

std::vector<std::pair<std::string, std::string>> fixture_files() {
  std::vector<std::pair<std::string, std::string>> files;
  for (const NamedFixture& f : canonical_fixtures())
    files.emplace_back(f.name + ".json", emit_instance(document_from_action(f.action)));
  return files;
}

}  // namespace pgalois::cli
