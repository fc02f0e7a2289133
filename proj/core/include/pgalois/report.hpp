#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgalois {

/// Raised for malformed input: wrong dimensions, unreduced entries, shapes
/// that do not fit together. Distinct from an axiom failing on well-formed
/// data, which is reported through ValidationReport.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Failure {
  std::string condition;
  std::vector<std::int64_t> witness;
  std::string detail;
};

class ValidationReport {
 public:
  bool ok() const { return failures_.empty(); }
  explicit operator bool() const { return ok(); }

  void fail(std::string condition, std::vector<std::int64_t> witness, std::string detail = {});
  void merge(const ValidationReport& other, const std::string& prefix = {});

  const std::vector<Failure>& failures() const { return failures_; }
  bool has(const std::string& condition) const;
  const Failure* first(const std::string& condition) const;
  std::string summary() const;

 private:
  std::vector<Failure> failures_;
};

}  // namespace pgalois
