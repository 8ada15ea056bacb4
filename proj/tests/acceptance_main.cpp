// Acceptance gate: runs every registered verification check at native depth,
// groups the results by acceptance criterion, and enforces wall-clock budgets.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ncinvert/verify.hpp"

namespace {

// Per-check budgets in milliseconds; everything else only counts toward the
// total budget.
const std::map<std::string, double> kCheckBudgetsMs = {
    {"charq-classic-table", 1000.0},
    {"g-series-table", 1000.0},
    {"quotient-matches-enumeration", 30000.0},
};
constexpr double kTotalBudgetMs = 120000.0;

}  // namespace

int main() {
  using ncinvert::CheckResult;
  ncinvert::VerifyOptions options;  // native depths
  const std::vector<CheckResult> results = ncinvert::run_checks("all", options);

  std::map<int, std::vector<const CheckResult*>> by_criterion;
  for (const CheckResult& result : results) {
    by_criterion[result.criterion].push_back(&result);
  }

  bool all_pass = true;
  double total_ms = 0.0;
  for (const auto& [criterion, group] : by_criterion) {
    bool pass = true;
    double group_ms = 0.0;
    for (const CheckResult* result : group) {
      pass = pass && result->pass;
      group_ms += result->milliseconds;
      total_ms += result->milliseconds;
      const auto budget = kCheckBudgetsMs.find(result->id);
      if (budget != kCheckBudgetsMs.end() && result->milliseconds > budget->second) {
        pass = false;
        std::printf("  TIME %s: %.1f ms exceeds budget %.1f ms\n", result->id.c_str(),
                    result->milliseconds, budget->second);
      }
    }
    std::printf("CRITERION %02d: %s (%.1f ms)\n", criterion, pass ? "PASS" : "FAIL", group_ms);
    if (!pass) {
      for (const CheckResult* result : group) {
        if (!result->pass) {
          std::printf("  FAIL %s: %s\n", result->id.c_str(), result->detail.c_str());
        }
      }
    }
    all_pass = all_pass && pass;
  }

  if (total_ms > kTotalBudgetMs) {
    std::printf("TOTAL TIME %.1f ms exceeds budget %.1f ms\n", total_ms, kTotalBudgetMs);
    all_pass = false;
  }
  std::printf("ACCEPTANCE: %s (%zu checks, %.1f ms)\n", all_pass ? "PASS" : "FAIL",
              results.size(), total_ms);
  return all_pass ? 0 : 1;
}
