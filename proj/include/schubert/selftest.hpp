#pragma once

// Oracle-equivalence and invariant suites run by `schubert selftest`.

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

enum class SelfTestLevel { Quick, Full };

struct SelfTestOptions {
  /// Negates every Littlewood-Richardson product the suites compute, to check
  /// that the suites notice a wrong sign.
  bool flip_lr_sign = false;
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::string first_failure;
  double seconds = 0;
};

struct SelfTestReport {
  std::vector<SuiteResult> suites;
  bool ok() const noexcept;
};

/// quick: the Gr_2(C^4) suite.  full: adds Schur products up to size 4,
/// the S_4 flag suite and the 3x3 Giambelli suite.
SelfTestReport run_selftest(SelfTestLevel level, const SelfTestOptions& options = {});

void print_selftest(std::ostream& out, const SelfTestReport& report);

}  // namespace schubert
