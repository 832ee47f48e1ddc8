#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sumtriples {

struct SelftestOptions {
    int max_n = 5;          // full problems checked against the oracle, n = 1..max_n
    int subset_trials = 200;
    uint32_t seed = 7;
    // Test fixture: corrupts one sum-update branch inside the consistency
    // suite so the battery's failure path (and its reproducer output) can
    // itself be tested. Never set outside tests.
    bool inject_fault = false;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    uint64_t checked = 0;   // instances examined
    std::string detail;     // on failure: the offending instance, in full
};

// The cross-validation battery: tier agreement and oracle agreement on full
// problems and random subsets, sum-update consistency along random descent
// paths, reduced-mode and forced-move soundness on the states where they
// trigger, endgame completeness on every six-element remainder, parity
// neutrality and the deficient-case rule for the variant problem.
std::vector<SuiteResult> run_battery(const SelftestOptions& opts);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace sumtriples
