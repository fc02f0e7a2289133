#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cli/instance.hpp"
#include "cli/report.hpp"

namespace pgalois::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOptions {
  std::optional<std::string> subring_text;   // contents of a --subring file
  bool timing = false;
};

/// Commands that produce a report: validate, galois, dual, frobenius,
/// morita, dashboard. Throws UsageError for anything else.
ReportDocument run(const std::string& command, const InstanceDocument& doc, const CommandOptions& options = {});

/// 0 when every verdict holds, 1 otherwise; 2 for an inconsistent dashboard.
int exit_code(const ReportDocument& rep);

/// The standalone partial-action instance induced by the document.
std::string generate(const InstanceDocument& doc);

/// File name and canonical text of each shipped fixture.
std::vector<std::pair<std::string, std::string>> fixture_files();

bool is_report_command(const std::string& command);

}  // namespace pgalois::cli
