// Runs every self-check suite at full scale and prints one line per
// criterion.  Exits nonzero if any executed check fails.

#include <cstdio>

#include "hyperdisc/verify.hpp"

int main() {
  const hyperdisc::VerifyReport report =
      hyperdisc::run_verify("all", "full", 0);
  int criterion = 0;
  for (const auto& check : report.checks) {
    ++criterion;
    std::printf("%-4s %2d. %-20s %7.2fs", check.status.c_str(), criterion,
                check.name.c_str(), check.seconds);
    for (const auto& [key, value] : check.measured)
      std::printf("  %s=%.6g", key.c_str(), value);
    std::printf("\n");
    if (check.status == "fail") std::printf("     %s\n", check.detail.c_str());
  }
  std::printf("%s\n", report.all_passed() ? "ALL CRITERIA PASS"
                                          : "CRITERIA FAILED");
  return report.all_passed() ? 0 : 1;
}
