#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dascent/word.hpp"

// Exhaustive cross-checks tying the generators, the hat map, the transpose,
// the permutation patterns, and the generating functions to one another and
// to frozen reference counts. Every check scans its full domain within the
// given bounds and reports the first counterexample found (generators run in
// lexicographic order, so failures are reproducible).

namespace dascent {

struct VerifyBounds {
  Entry max_d = 0;
  Entry max_n = 0;
};

struct VerifyReport {
  std::string name;
  bool pass = true;
  std::int64_t instances = 0;   // elementary objects/cells examined
  std::string counterexample;   // empty when pass
  double seconds = 0.0;
};

// Registered check names, in canonical order.
const std::vector<std::string>& verify_names();

// Default bounds for a registered check; unknown name throws.
VerifyBounds verify_default_bounds(const std::string& name);

// Runs one named check. Unknown names throw invalid_argument, as do bounds
// exceeding the embedded reference data (table1, table2, self2_display).
VerifyReport verify_theorem(const std::string& name, VerifyBounds bounds);

}  // namespace dascent
