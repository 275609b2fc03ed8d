#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

namespace ftcat {

struct Finding {
  std::string severity;  // "error", "warning" or "info"
  std::string code;
  std::string message;
  std::vector<int> witness;
};

using Report = std::vector<Finding>;

inline void sort_findings(Report& r) {
  std::stable_sort(r.begin(), r.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.severity, a.code) < std::tie(b.severity, b.code);
  });
}

inline bool has_errors(const Report& r) {
  return std::any_of(r.begin(), r.end(), [](const Finding& f) { return f.severity == "error"; });
}

inline bool has_code(const Report& r, const std::string& code) {
  return std::any_of(r.begin(), r.end(), [&](const Finding& f) { return f.code == code; });
}

}  // namespace ftcat
