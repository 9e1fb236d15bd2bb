#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ellfgl {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
};

}  // namespace ellfgl
