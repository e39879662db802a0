#ifndef JUMPQ_VERIFY_HPP
#define JUMPQ_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "jumpq/machine.hpp"

namespace jumpq {

/// Outcome of one cross-check. `detail` summarizes what was compared, or
/// holds a minimal counterexample on failure.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Bounds for the verification suite. The defaults are what CI runs; the
/// _bound fields are the factorial-cost guards and are only raised via the
/// CLI's --force.
struct VerifyOptions {
  int max_n = 8;         // characterization depth, both disciplines
  int exhaustive_n = 6;  // greedy-vs-DFS depth
  int frontal_m = 7;     // frontal-segment depth
  int witness_n = 7;     // witness soundness depth
  int ternary_terms = 500;
  int agreement_n = 200;
  int growth_index = 1000;
  int brute_bound = kBruteForceBound;
  int exhaustive_bound = kExhaustiveBound;
  int frontal_bound = kFrontalBound;
};

// The nine acceptance checks plus one containment sanity check. Each is
// independent; all bounds come from the options.
CheckResult check_series_regression();
CheckResult check_loose_characterization(const VerifyOptions& opts);
CheckResult check_strict_characterization(const VerifyOptions& opts);
CheckResult check_greedy_adequacy(const VerifyOptions& opts);
CheckResult check_frontal_segments(const VerifyOptions& opts);
CheckResult check_ternary_crosscheck(const VerifyOptions& opts);
CheckResult check_dp_recurrence_agreement(const VerifyOptions& opts);
CheckResult check_growth_bracket(const VerifyOptions& opts);
CheckResult check_witness_soundness(const VerifyOptions& opts);
CheckResult check_strict_within_loose(const VerifyOptions& opts);

/// Runs every check. When `progress` is non-null, one line per check is
/// written to it as results arrive.
std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          std::ostream* progress = nullptr);

} // namespace jumpq

#endif
