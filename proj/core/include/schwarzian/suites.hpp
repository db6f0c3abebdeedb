#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schwarzian/report.hpp"

namespace schwarzian {

struct SuiteOptions {
  int order = 64;          // q-expansion truncation order
  int trials = 200;        // instances per randomized law
  std::uint64_t seed = 1729;
  double step = 1e-3;      // integrator step for the numeric checks
  bool inject_failure = false;  // perturbs the genus-2 target (test fixture)
};

// Fixed execution order; `verify all` runs these back to back.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& options);

std::vector<CheckReport> run_all_suites(const SuiteOptions& options);

}  // namespace schwarzian
