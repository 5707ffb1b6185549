#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apolar {

// Outcome of one seeded verification suite: `performed` counts the checks
// actually executed (random draws that fail a suite's entry filter are
// redrawn, not counted), `passed` how many held.  A suite is ok when every
// performed check passed and at least one ran.
struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int performed = 0;
  int passed = 0;
  bool ok = false;
  std::string description;
  std::vector<std::string> failures;  // first few diagnostics
};

// The thirteen suite names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

// Run a named suite with `trials` seeded instances (suites with a fixed
// check list treat trials as the size of their randomized part, if any).
// Throws input_error for an unknown name or trials < 1.
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed);

}  // namespace apolar
