#pragma once

// Built-in property suites, one per module. Every check is exhaustive over a
// small fixed domain and its outcome does not depend on the worker count.

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string detail;  // first failure, empty when passed
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Suite names in execution order.
const std::vector<std::string>& selftest_suites();

/// Runs one suite; throws Error for an unknown name.
SuiteResult run_selftest_suite(const std::string& name, int workers = 1);

}  // namespace ramsey
