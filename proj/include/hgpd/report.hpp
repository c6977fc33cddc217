#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hgpd {

// Outcome of a verification routine: a name, a verdict and one line per
// failure.
struct CheckReport {
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
  void merge(const CheckReport& other) {
    cases += other.cases;
    if (!other.passed) passed = false;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace hgpd
