// Full verification suite at the contract ranges: one pass/fail line per
// criterion, nonzero exit on any failure.

#include <cstdio>
#include <iostream>

#include "skein/exec.hpp"
#include "skein/verify.hpp"

int main() {
  skein::apply_thread_env();
  skein::verify::VerifyOptions options;  // full ranges
  const skein::verify::VerifyReport report =
      skein::verify::run_acceptance(options, &std::cout);
  std::cout << (report.all_passed() ? "ALL CHECKS PASSED" : "FAILURES PRESENT")
            << std::endl;
  return report.all_passed() ? 0 : 1;
}
