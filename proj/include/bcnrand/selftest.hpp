#pragma once

// Built-in correctness checks wired to `bcnrand selftest`: kernel equivalence
// sweeps, skip-ahead consistency, the mathematical oracles, worker invariance,
// and the quality smoke suite.

#include <span>
#include <string>
#include <vector>

#include "bcnrand/modred.hpp"

namespace bcn::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs every check; `fast` shrinks the sweep sizes so the suite finishes in a
// few seconds. The constants argument exists so a corrupted table is
// detectable by tests; production callers use the default.
std::vector<CheckResult> run_all(bool fast = false,
                                 const modred::ReductionConstants& c = modred::constants());

bool all_passed(std::span<const CheckResult> results);

}  // namespace bcn::selftest
