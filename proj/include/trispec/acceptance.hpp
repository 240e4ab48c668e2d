#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trispec {

struct AcceptanceOptions {
    std::uint64_t seed = 20240611; ///< for the randomized property checks
    int jobs = 1;                  ///< grid-scan workers
};

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    double budget_seconds = 0.0;
    double seconds = 0.0;
    std::vector<CheckLine> checks;
    bool pass = false; ///< every check passed within the time budget
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion, 1..kCriterionCount. Domain errors raised
/// inside a criterion are recorded as a failed check.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, const AcceptanceOptions& options = {});

/// "C<id> PASS|FAIL <seconds>s/<budget>s <title>" followed by indented check lines.
std::string format_result(const CriterionResult& result, bool verbose = true);

} // namespace trispec
