// Acceptance suite: runs every cross-check at full depth and prints one
// pass/fail line per criterion. Exit status is the number of failures.
//
//   1. series regression        f_0..f_9 by dp and by recurrence
//   2. loose characterization   producible(n, loose) = Av(4231), n <= 8
//   3. strict characterization  producible(n, strict) = Av(4231, 42513) and
//                               |set| = f_n, n <= 9
//   4. greedy adequacy          greedy set = DFS set, n <= 6, both modes
//   5. frontal segments         frontal outputs = 231-avoiders, m <= 7
//   6. ternary cross-check      cubic convolution = binomial(3i,i-1)/i, i <= 500
//   7. dp/recurrence agreement  f_dp(n) = f_rec(n), n <= 200
//   8. growth bracket           ratios < 27/4 up to n=1000; final in [6.68, 6.75]
//   9. witness soundness        every failure witness verifies, n <= 7

#include <chrono>
#include <cstdio>

#include "jumpq/verify.hpp"

using namespace jumpq;

int main() {
  VerifyOptions opts; // defaults are the acceptance depths
  opts.max_n = 8;
  opts.exhaustive_n = 6;
  opts.frontal_m = 7;
  opts.witness_n = 7;
  opts.ternary_terms = 500;
  opts.agreement_n = 200;
  opts.growth_index = 1000;

  VerifyOptions strict_opts = opts;
  strict_opts.max_n = 9; // the optional n = 9 extension of criterion 3

  struct Criterion {
    int number;
    CheckResult (*run)(const VerifyOptions&);
    const VerifyOptions* options;
  };
  const Criterion criteria[] = {
      {1, [](const VerifyOptions&) { return check_series_regression(); }, &opts},
      {2, check_loose_characterization, &opts},
      {3, check_strict_characterization, &strict_opts},
      {4, check_greedy_adequacy, &opts},
      {5, check_frontal_segments, &opts},
      {6, check_ternary_crosscheck, &opts},
      {7, check_dp_recurrence_agreement, &opts},
      {8, check_growth_bracket, &opts},
      {9, check_witness_soundness, &opts},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const CheckResult result = criterion.run(*criterion.options);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  criterion %d (%s): %s  [%.2fs]\n", result.pass ? "PASS" : "FAIL",
                criterion.number, result.name.c_str(), result.detail.c_str(), secs);
    std::fflush(stdout);
    failures += result.pass ? 0 : 1;
  }
  if (failures == 0)
    std::printf("all 9 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
