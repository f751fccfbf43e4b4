#pragma once

#include <string>
#include <vector>

namespace io2::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Named numerical/symbolic checks, grouped by suite:
/// "hermite", "algebra", "rep", "transforms", or "all". Deterministic
/// (fixed seeds). Unknown suite names throw std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace io2::verify
