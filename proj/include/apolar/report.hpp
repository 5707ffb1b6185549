#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apolar/classify.hpp"

namespace apolar {

// Machine-readable result of one CLI invocation.  Every command fills the
// sections it computed and leaves the rest absent; absent sections are not
// serialized.  All values are exact: counts as JSON integers, rational
// functions and series as their canonical strings.  Elapsed time is shown in
// the human output only, so identical inputs serialize to identical bytes.
struct PoincareSection {
  bool present = false;
  bool has_closed_form = false;
  std::string closed_form;
  std::string relation;
  std::string oracle;
  bool has_base = false;
  std::string base_oracle;
  bool consistent = false;
};

struct SplitSection {
  bool present = false;
  bool equal = false;
  int first_mismatch = -1;
  std::string sigma_g;
  std::string sigma_h;  // empty when the split has no second witness
  std::vector<std::string> generators;
};

struct EnumerateSection {
  bool present = false;
  int socle_degree = 0;
  long max_dim = 0;
  int max_h2 = 0;
  bool dichotomy = false;
  std::vector<std::vector<std::vector<int>>> tables;
};

struct VerifySection {
  bool present = false;
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  int performed = 0;
  int passed = 0;
  bool ok = false;
  std::string description;
  std::vector<std::string> failures;
};

struct Report {
  std::string command;
  std::string input;  // canonical polynomial text; empty when not applicable

  std::vector<int> hilbert;  // empty when not computed
  int socle_degree = -1;
  int capital_degree = -1;
  long dim = -1;

  std::vector<std::vector<int>> decomposition;  // rows; empty when absent
  std::vector<int> f;

  std::vector<std::string> annihilator;  // canonical generator text

  std::vector<long> betti;  // empty when absent
  int pmax = -1;

  PoincareSection poincare;
  bool has_verdicts = false;
  TheoremVerdict verdicts;
  SplitSection split;
  EnumerateSection enumeration;
  VerifySection verify;

  long timing_ms = 0;  // human output only, never serialized
};

// Serialize with a stable key order and a trailing newline.
std::string to_json(const Report& r);

}  // namespace apolar
