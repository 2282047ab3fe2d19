// check_suite.hpp — Self-contained invariant families (conservation laws,
// formula-vs-simulation agreement, regime-sign agreement, algebraic
// identities) runnable as a batch with pass/fail per family.

#pragma once

#include <string>
#include <vector>

namespace qotto {

enum class CheckGrid { Small, Full };

struct CheckFamilyResult {
    std::string name;
    bool passed = false;
    long long cases = 0;
    double worst = 0.0;   // extremal residual or margin for the family
    std::string detail;   // parameters of the worst case
};

// Families, in order: first-law, clausius, carnot, formula-vs-simulation,
// regime-sign, f2-identity, swap-sum-heats. Small grid trades coverage for a
// sub-5-second runtime; Full is the reference sweep.
std::vector<CheckFamilyResult> run_check_suite(CheckGrid grid, bool parallel = true);

bool all_passed(const std::vector<CheckFamilyResult>& results);

}  // namespace qotto
