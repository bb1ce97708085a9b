#pragma once

#include <string>
#include <vector>

namespace cantorian {

enum class VerifyLevel { quick, full };

struct CheckResult {
    std::string name;
    bool pass = false;
    bool required = true; // stretch targets and declarations report but never gate
    std::string detail;
    double seconds = 0.0;
};

// Runs the cross-validation battery: oracle agreement, census totals,
// class/tested counts, closed forms, per-class cardinalities, bi-Cantorian
// totals and classes, the hypergraph suite, and the determinism check.
// quick keeps to the small exhaustive suites.
std::vector<CheckResult> run_verification(VerifyLevel level, int workers = 0);

bool all_required_pass(const std::vector<CheckResult>& results);

} // namespace cantorian
