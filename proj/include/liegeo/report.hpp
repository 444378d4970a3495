#ifndef LIEGEO_REPORT_HPP
#define LIEGEO_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace liegeo {

/// Accumulates human-readable constraint violations. Violations are data,
/// not exceptions: an empty report means the checked object is valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool empty() const { return violations.empty(); }
  std::size_t size() const { return violations.size(); }

  void add(std::string message) { violations.push_back(std::move(message)); }

  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }

  std::string to_string() const {
    std::string out;
    for (const auto& v : violations) {
      out += v;
      out += '\n';
    }
    return out;
  }
};

}  // namespace liegeo

#endif
