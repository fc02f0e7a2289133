#include "pgalois/report.hpp"

#include <algorithm>
#include <sstream>

namespace pgalois {

void ValidationReport::fail(std::string condition, std::vector<std::int64_t> witness, std::string detail) {
  failures_.push_back({std::move(condition), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& f : other.failures_) failures_.push_back({prefix + f.condition, f.witness, f.detail});
}

bool ValidationReport::has(const std::string& condition) const { return first(condition) != nullptr; }

const Failure* ValidationReport::first(const std::string& condition) const {
  auto it = std::find_if(failures_.begin(), failures_.end(),
                         [&](const Failure& f) { return f.condition == condition; });
  return it == failures_.end() ? nullptr : &*it;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& f : failures_) {
    os << f.condition << "(";
    for (std::size_t i = 0; i < f.witness.size(); ++i) os << (i ? "," : "") << f.witness[i];
    os << ")";
    if (!f.detail.empty()) os << ": " << f.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace pgalois
