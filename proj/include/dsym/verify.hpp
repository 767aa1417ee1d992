#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dsym {

struct CheckResult {
  std::string id;
  std::string params;
  bool pass = false;
  std::string witness;  // set iff the check failed
  double millis = 0.0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Scale knobs. max_n < 0 means "run every check at its full documented
/// scale"; otherwise caps the n ceilings. ks filters window widths where a
/// check sweeps several. order applies to the series suite.
struct VerifyOptions {
  int max_n = -1;
  std::vector<int> ks = {2, 3, 4};
  int order = 13;
};

const std::vector<std::string>& verify_suite_names();

/// Runs one named suite ("codes", "classes", ...). Throws
/// std::invalid_argument for unknown names.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opts);

/// Runs every suite, ordered by suite name.
std::vector<VerificationReport> run_all_suites(const VerifyOptions& opts);

}  // namespace dsym
