#pragma once

#include <string>
#include <vector>

namespace spincurve {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst errors / counts, or the failure reason
};

// Names of the verification suites, in canonical order.
std::vector<std::string> check_names();

// Runs one suite by name; unknown names throw PreconditionError.
CheckResult run_check(const std::string& name, unsigned seed);

std::vector<CheckResult> run_all_checks(unsigned seed);

}  // namespace spincurve
