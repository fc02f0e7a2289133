#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgalois/report.hpp"

namespace pgalois::cli {

struct ReportDocument {
  std::string command;
  std::map<std::string, bool> verdicts;
  std::map<std::string, std::vector<std::int64_t>> witnesses;
  std::map<std::string, std::uint64_t> dimensions;
  std::optional<std::map<std::string, double>> timing;

  bool all_true() const;
  /// Records the first witness of every failed condition under
  /// "<prefix>.<condition>".
  void add_failures(const std::string& prefix, const ValidationReport& rep);
};

/// Key-sorted JSON with a trailing newline. Throws StructuralError when the
/// report carries no verdict.
std::string emit_report(const ReportDocument& rep);

}  // namespace pgalois::cli
