#pragma once

// Built-in verification suites: closed-form oracles, cross-engine agreement,
// conformance between independent eliminations, reduction identities on the
// closed formulas, and bound checks over the bundled scenarios.

#include <cstdint>
#include <string>
#include <vector>

namespace euchar {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
};

// Runs every suite whose name contains `filter` (all when empty).  The seed
// drives only the randomized corpora (product-formula, snf-conformance);
// every other suite is deterministic.
std::vector<SuiteResult> run_selftest(const std::string& filter = "",
                                      std::uint64_t seed = 0);

}  // namespace euchar
