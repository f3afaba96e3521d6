// Runs the named structural checks for one dimension and collects a report.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace circbasis {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  // On failure, names a concrete counterexample.
  std::string detail;
  double elapsed_ms = 0;
};

struct VerifyReport {
  int dim = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  // 0 when nothing failed, 1 otherwise.
  int exit_code() const { return all_passed() ? 0 : 1; }
};

// bijection, p15, bshift, order, thm24, cor25, chain-identity, fourier,
// conjecture34, hypothesis36, expansion, rotation
const std::vector<std::string>& check_names();

// "all" selects every check. Throws std::invalid_argument on an unknown name
// and InvalidDimension for odd D or D > 12.
VerifyReport run_verify(int dim, const std::vector<std::string>& names);

std::string to_string(CheckStatus status);
// Timings are left out unless asked for, so output is reproducible.
void write_report(std::ostream& os, const VerifyReport& report, bool show_timings = false);

}  // namespace circbasis
