#pragma once

#include <string>
#include <vector>

namespace ncinvert {

/* Depth control for the verification sweeps.  max_degree < 0 runs every
 * check at its native depth (the depth its golden data and cross-checks
 * are frozen for); a nonnegative value clamps all sweeps, so 0 makes every
 * check vacuous.  jobs is accepted for interface stability; checks are
 * independent and their results do not depend on scheduling. */
struct VerifyOptions {
  int max_degree = -1;
  int jobs = 1;
};

struct CheckOutcome {
  bool pass = true;
  /* failure diagnostics, or logged data of interest on success */
  std::string detail;
};

/* One registered check.  suite is one of "paper-tables" (frozen golden
 * values), "oracles" (independent brute-force cross-checks), "involutions"
 * (involutive maps and isomorphism certificates).  criterion tags the
 * acceptance criterion (1..14) the check supports. */
struct Check {
  std::string id;
  std::string suite;
  int criterion = 0;
  CheckOutcome (*run)(const VerifyOptions&);
};

const std::vector<Check>& all_checks();

struct CheckResult {
  std::string id;
  std::string suite;
  int criterion = 0;
  bool pass = false;
  std::string detail;
  double milliseconds = 0.0;
};

/* Runs the checks of one suite ("all" for every suite) in registry order. */
std::vector<CheckResult> run_checks(const std::string& suite, const VerifyOptions& options);

}  // namespace ncinvert
