#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hyperdisc {

// Outcome of one self-check suite.  `measured` carries the quantities the
// suite computed (extrema, residuals, counts) so reports can show the
// margins, not just a verdict; `detail` states what was checked, with the
// tolerances pinned in the text.
struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped"
  std::string detail;
  std::vector<std::pair<std::string, double>> measured;
  double seconds = 0.0;
};

struct VerifyReport {
  std::string scale;  // "small" | "full"
  std::vector<CheckResult> checks;

  // True when no executed check failed (skipped checks do not count).
  bool all_passed() const;
};

// Names of the available check suites, in execution order.
const std::vector<std::string>& verify_suites();

// Runs the library's self-check suites.  `suite` is "all" or one name
// from verify_suites(); anything else is an input error listing the
// choices.  `scale` is "full" (run everything, up to the per-operation
// capacity guards) or "small" (cap instance sizes at n = 7; scopes that
// need more are reported as skipped).  `threads` is forwarded to the
// scanning operations (0 = auto).
VerifyReport run_verify(const std::string& suite, const std::string& scale,
                        int threads = 0);

}  // namespace hyperdisc
