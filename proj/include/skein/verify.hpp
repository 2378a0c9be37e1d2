#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "skein/exec.hpp"

namespace skein::verify {

struct CheckResult {
  std::string name;
  std::string range;
  bool passed = false;
  std::string witness;  // first failing case, empty on pass
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Caps shrink the sweeps for quick runs; the defaults are the full ranges.
struct VerifyOptions {
  int max_n = 14;
  Exec ex = Exec::parallel;
  bool skip_numeric_tier = false;  // the slowest check, separable on request
};

CheckResult check_determinants_symbolic(const VerifyOptions& o);
CheckResult check_determinants_numeric(const VerifyOptions& o);
CheckResult check_jones_wenzl(const VerifyOptions& o);
CheckResult check_orthogonal_norms(const VerifyOptions& o);
CheckResult check_unitriangular(const VerifyOptions& o);
CheckResult check_step_counts(const VerifyOptions& o);
CheckResult check_bijection(const VerifyOptions& o);
CheckResult check_generating_functions(const VerifyOptions& o);
CheckResult check_conservation(const VerifyOptions& o);
CheckResult check_semi_meander(const VerifyOptions& o);

// Runs every check, streaming one pass/fail line per check to `progress`
// when given.
VerifyReport run_acceptance(const VerifyOptions& o, std::ostream* progress);

}  // namespace skein::verify
