#include "jumpq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "jumpq/enumeration.hpp"

namespace jumpq {

namespace {

const std::vector<Permutation>& loose_patterns() {
  static const std::vector<Permutation> p{Permutation({4, 2, 3, 1})};
  return p;
}

const std::vector<Permutation>& strict_patterns() {
  static const std::vector<Permutation> p{Permutation({4, 2, 3, 1}),
                                          Permutation({4, 2, 5, 1, 3})};
  return p;
}

std::set<Permutation> avoider_set(int n, const std::vector<Permutation>& patterns,
                                  int bound) {
  std::set<Permutation> out;
  auto stream = permutations_of(n, bound);
  while (auto perm = stream.next())
    if (avoids_all(*perm, patterns)) out.insert(*perm);
  return out;
}

// Reports the least element separating two sets that should be equal.
std::string first_difference(const std::set<Permutation>& left, const std::string& left_name,
                             const std::set<Permutation>& right,
                             const std::string& right_name) {
  for (const auto& p : left)
    if (!right.contains(p)) return "'" + p.str() + "' " + left_name + " but not " + right_name;
  for (const auto& p : right)
    if (!left.contains(p)) return "'" + p.str() + "' " + right_name + " but not " + left_name;
  return "sets equal";
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (std::size_t s : sizes) {
    if (!out.empty()) out += ',';
    out += std::to_string(s);
  }
  return out;
}

CheckResult characterization_check(const std::string& name, LockDiscipline discipline,
                                   const std::vector<Permutation>& patterns,
                                   bool compare_count_to_f, const VerifyOptions& opts) {
  CheckResult res{name, true, ""};
  const auto f = f_series_recurrence(opts.max_n).coefficients;
  std::vector<std::size_t> sizes;
  for (int n = 0; n <= opts.max_n; ++n) {
    const auto produced = producible_set(n, discipline, opts.brute_bound);
    const auto avoiders = avoider_set(n, patterns, opts.brute_bound);
    if (produced != avoiders) {
      res.pass = false;
      res.detail = "n=" + std::to_string(n) + ": " +
                   first_difference(produced, "producible", avoiders, "an avoider");
      return res;
    }
    if (compare_count_to_f && BigCount(produced.size()) != f[static_cast<std::size_t>(n)]) {
      res.pass = false;
      res.detail = "n=" + std::to_string(n) + ": |producible| = " +
                   std::to_string(produced.size()) + " but f_n = " +
                   f[static_cast<std::size_t>(n)].str();
      return res;
    }
    sizes.push_back(produced.size());
  }
  res.detail = "n=0.." + std::to_string(opts.max_n) + ": set equality, sizes " +
               join_sizes(sizes);
  if (compare_count_to_f) res.detail += ", all equal to f_n";
  return res;
}

} // namespace

CheckResult check_series_regression() {
  static const long expected[] = {1, 1, 2, 6, 23, 102, 495, 2549, 13682, 75714};
  CheckResult res{"series_regression", true, ""};
  const auto rec = f_series_recurrence(9).coefficients;
  const auto dp = dp_tables(9);
  for (int n = 0; n <= 9; ++n) {
    const BigCount want(expected[n]);
    if (rec[static_cast<std::size_t>(n)] != want) {
      res.pass = false;
      res.detail = "recurrence f_" + std::to_string(n) + " = " +
                   rec[static_cast<std::size_t>(n)].str() + ", expected " + want.str();
      return res;
    }
    if (dp.l(0, n) != want) {
      res.pass = false;
      res.detail = "dp f_" + std::to_string(n) + " = " + dp.l(0, n).str() + ", expected " +
                   want.str();
      return res;
    }
  }
  res.detail = "f_0..f_9 = 1,1,2,6,23,102,495,2549,13682,75714 by both dp and recurrence";
  return res;
}

CheckResult check_loose_characterization(const VerifyOptions& opts) {
  return characterization_check("loose_characterization", LockDiscipline::Loose,
                                loose_patterns(), false, opts);
}

CheckResult check_strict_characterization(const VerifyOptions& opts) {
  return characterization_check("strict_characterization", LockDiscipline::Strict,
                                strict_patterns(), true, opts);
}

CheckResult check_greedy_adequacy(const VerifyOptions& opts) {
  CheckResult res{"greedy_adequacy", true, ""};
  for (int n = 0; n <= opts.exhaustive_n; ++n) {
    for (LockDiscipline d : {LockDiscipline::Loose, LockDiscipline::Strict}) {
      const auto greedy = producible_set(n, d, opts.brute_bound);
      const auto exhaustive = producible_set_exhaustive(n, d, opts.exhaustive_bound);
      if (greedy != exhaustive) {
        res.pass = false;
        res.detail = "n=" + std::to_string(n) + " " + to_string(d) + ": " +
                     first_difference(greedy, "greedy-producible", exhaustive,
                                      "DFS-reachable");
        return res;
      }
    }
  }
  res.detail = "greedy set = DFS set for n=0.." + std::to_string(opts.exhaustive_n) +
               ", both disciplines";
  return res;
}

CheckResult check_frontal_segments(const VerifyOptions& opts) {
  CheckResult res{"frontal_segments", true, ""};
  std::vector<std::size_t> sizes;
  for (int m = 0; m <= opts.frontal_m; ++m) {
    const auto loose = frontal_outputs(m, LockDiscipline::Loose, opts.frontal_bound);
    const auto strict = frontal_outputs(m, LockDiscipline::Strict, opts.frontal_bound);
    const auto avoiders = avoider_set(m, {Permutation({2, 3, 1})},
                                      std::max(opts.frontal_bound, kBruteForceBound));
    if (loose != avoiders || strict != avoiders) {
      res.pass = false;
      res.detail = "m=" + std::to_string(m) + ": " +
                   first_difference(loose, "frontal output", avoiders, "a 231-avoider");
      return res;
    }
    if (BigCount(loose.size()) != catalan(m)) {
      res.pass = false;
      res.detail = "m=" + std::to_string(m) + ": " + std::to_string(loose.size()) +
                   " outputs but catalan(m) = " + catalan(m).str();
      return res;
    }
    sizes.push_back(loose.size());
  }
  res.detail = "m=0.." + std::to_string(opts.frontal_m) +
               ": outputs = 231-avoiders under both disciplines, sizes " + join_sizes(sizes);
  return res;
}

CheckResult check_ternary_crosscheck(const VerifyOptions& opts) {
  CheckResult res{"ternary_crosscheck", true, ""};
  const auto series = ternary_series(opts.ternary_terms).coefficients;
  for (int i = 0; i <= opts.ternary_terms; ++i) {
    const BigCount closed = ternary_count(i);
    if (series[static_cast<std::size_t>(i)] != closed) {
      res.pass = false;
      res.detail = "eta_" + std::to_string(i) + ": series " +
                   series[static_cast<std::size_t>(i)].str() + " vs closed form " +
                   closed.str();
      return res;
    }
  }
  res.detail = "cubic-convolution coefficients equal binomial(3i,i-1)/i for i=0.." +
               std::to_string(opts.ternary_terms);
  return res;
}

CheckResult check_dp_recurrence_agreement(const VerifyOptions& opts) {
  CheckResult res{"dp_recurrence_agreement", true, ""};
  const auto dp = dp_tables(opts.agreement_n);
  const auto rec = f_series_recurrence(opts.agreement_n).coefficients;
  for (int n = 0; n <= opts.agreement_n; ++n) {
    if (dp.l(0, n) != rec[static_cast<std::size_t>(n)]) {
      res.pass = false;
      res.detail = "n=" + std::to_string(n) + ": dp " + dp.l(0, n).str() + " vs recurrence " +
                   rec[static_cast<std::size_t>(n)].str();
      return res;
    }
  }
  res.detail = "f_dp(n) = f_recurrence(n) for n=0.." + std::to_string(opts.agreement_n) +
               "; f_" + std::to_string(opts.agreement_n) + " has " +
               std::to_string(rec.back().str().size()) + " digits";
  return res;
}

CheckResult check_growth_bracket(const VerifyOptions& opts) {
  CheckResult res{"growth_bracket", true, ""};
  const BigRatio upper(27, 4);      // strict upper bound for every ratio
  const BigRatio lower(668, 100);   // bracket floor at the final index
  const auto terms = growth_ratio(opts.growth_index + 1);
  for (const auto& term : terms) {
    if (!(term.value < upper)) {
      res.pass = false;
      res.detail = "f_{n+1}/f_n at n=" + std::to_string(term.index) + " is " + term.decimal +
                   " >= 27/4";
      return res;
    }
  }
  const auto& last = terms.back();
  if (last.value < lower) {
    res.pass = false;
    res.detail = "ratio at n=" + std::to_string(last.index) + " is " + last.decimal +
                 " < 6.68";
    return res;
  }
  res.detail = "all ratios below 27/4 for n=1.." + std::to_string(last.index) +
               "; ratio at n=" + std::to_string(last.index) + " is " + last.decimal +
               " in [6.68, 6.75]";
  return res;
}

CheckResult check_witness_soundness(const VerifyOptions& opts) {
  CheckResult res{"witness_soundness", true, ""};
  long failures = 0;
  for (int n = 0; n <= opts.witness_n; ++n) {
    for (LockDiscipline d : {LockDiscipline::Loose, LockDiscipline::Strict}) {
      auto stream = permutations_of(n, opts.brute_bound);
      while (auto perm = stream.next()) {
        const auto result = recognize(*perm, d);
        if (result.producible) continue;
        ++failures;
        const auto fail = [&](const std::string& why) {
          res.pass = false;
          res.detail = "perm '" + perm->str() + "' (" + to_string(d) + "): " + why;
        };
        if (!result.witness) {
          fail("no witness attached");
          return res;
        }
        const auto& w = *result.witness;
        const bool pattern_ok =
            w.pattern == Permutation({4, 2, 3, 1}) ||
            (d == LockDiscipline::Strict && w.pattern == Permutation({4, 2, 5, 1, 3}));
        if (!pattern_ok) {
          fail("witness pattern '" + w.pattern.str() + "' not legal for discipline");
          return res;
        }
        const auto occ = contains_pattern(*perm, w.pattern);
        if (!occ) {
          fail("claimed pattern '" + w.pattern.str() + "' not found by contains_pattern");
          return res;
        }
        // The reported occurrence must itself embed the pattern.
        for (std::size_t a = 0; a < w.occurrence.positions.size(); ++a) {
          for (std::size_t b = a + 1; b < w.occurrence.positions.size(); ++b) {
            const int pa = w.occurrence.positions[a] - 1;
            const int pb = w.occurrence.positions[b] - 1;
            if (pa >= pb || pb >= perm->size() ||
                (perm->at(pa) < perm->at(pb)) !=
                    (w.pattern.at(static_cast<int>(a)) < w.pattern.at(static_cast<int>(b)))) {
              fail("witness positions are not an occurrence of the pattern");
              return res;
            }
          }
        }
      }
    }
  }
  res.detail = std::to_string(failures) + " non-producible cases for n<=" +
               std::to_string(opts.witness_n) + ", every witness verified";
  return res;
}

CheckResult check_strict_within_loose(const VerifyOptions& opts) {
  CheckResult res{"strict_within_loose", true, ""};
  for (int n = 0; n <= opts.max_n; ++n) {
    const auto strict = producible_set(n, LockDiscipline::Strict, opts.brute_bound);
    const auto loose = producible_set(n, LockDiscipline::Loose, opts.brute_bound);
    if (!std::includes(loose.begin(), loose.end(), strict.begin(), strict.end())) {
      for (const auto& p : strict)
        if (!loose.contains(p)) {
          res.pass = false;
          res.detail = "n=" + std::to_string(n) + ": '" + p.str() +
                       "' strict-producible but not loose-producible";
          return res;
        }
    }
  }
  res.detail = "strict producible set contained in loose for n=0.." +
               std::to_string(opts.max_n);
  return res;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts, std::ostream* progress) {
  using Clock = std::chrono::steady_clock;
  std::vector<CheckResult> results;
  const auto run = [&](CheckResult (*check)(const VerifyOptions&)) {
    const auto t0 = Clock::now();
    CheckResult r = check(opts);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (progress) {
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(2);
      line << (r.pass ? "ok  " : "FAIL") << ' ' << r.name << ": " << r.detail << " (" << secs
           << "s)\n";
      *progress << line.str() << std::flush;
    }
    results.push_back(std::move(r));
  };
  run([](const VerifyOptions&) { return check_series_regression(); });
  run(check_loose_characterization);
  run(check_strict_characterization);
  run(check_greedy_adequacy);
  run(check_frontal_segments);
  run(check_ternary_crosscheck);
  run(check_dp_recurrence_agreement);
  run(check_growth_bracket);
  run(check_witness_soundness);
  run(check_strict_within_loose);
  return results;
}

} // namespace jumpq
