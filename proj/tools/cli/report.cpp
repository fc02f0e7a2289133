#include "cli/report.hpp"

#include "json.hpp"

namespace pgalois::cli {

bool ReportDocument::all_true() const {
  for (const auto& [name, value] : verdicts)
    if (!value) return false;
  return true;
}

void ReportDocument::add_failures(const std::string& prefix, const ValidationReport& rep) {
  for (const Failure& f : rep.failures()) witnesses.emplace(prefix + "." + f.condition, f.witness);
}

std::string emit_report(const ReportDocument& rep) {
  if (rep.verdicts.empty()) throw StructuralError("report for '" + rep.command + "' carries no verdict");
  nlohmann::json root;
  root["command"] = rep.command;
  root["verdicts"] = rep.verdicts;
  root["witnesses"] = nlohmann::json::object();
  for (const auto& [name, w] : rep.witnesses) root["witnesses"][name] = w;
  root["dimensions"] = nlohmann::json::object();
  for (const auto& [name, d] : rep.dimensions) root["dimensions"][name] = d;
  if (rep.timing) root["timing"] = *rep.timing;
  return root.dump(2) + "\n";
}

}  // namespace pgalois::cli
