#include "jumpq/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "jumpq/enumeration.hpp"
#include "jumpq/verify.hpp"
#include "jumpq/wire.hpp"

namespace jumpq {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBoundExceeded = 4;

LockDiscipline discipline_from(const std::string& name) {
  return name == "strict" ? LockDiscipline::Strict : LockDiscipline::Loose;
}

std::string run_check(const std::string& perm_text, const std::string& discipline_name,
                      bool with_trace) {
  const Permutation perm = parse_permutation(perm_text);
  const LockDiscipline discipline = discipline_from(discipline_name);
  const RecognitionResult result = recognize(perm, discipline);
  nlohmann::json out;
  out["producible"] = result.producible;
  if (with_trace) {
    out["n"] = perm.size();
    out["discipline"] = to_string(discipline);
    if (result.producible)
      out["trace"] = trace_to_json(perm.size(), discipline, result.trace);
    else
      out["blocked_at"] = result.blocked_at;
  }
  if (!result.producible && result.witness) out["witness"] = witness_to_json(*result.witness);
  return out.dump() + "\n";
}

std::string run_count(int n, const std::string& method, bool force) {
  BigCount value;
  if (method == "bruteforce") {
    value = f_bruteforce(n, force ? std::max(n, kBruteForceBound) : kBruteForceBound);
  } else if (method == "dp") {
    value = f_dp(n);
  } else {
    value = f_series_recurrence(n).coefficients[static_cast<std::size_t>(n)];
  }
  return value.str() + "\n";
}

std::string run_series(int terms, const std::string& format) {
  const auto series = f_series_recurrence(terms);
  std::string out;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : series.coefficients) arr.push_back(c.str());
    out = arr.dump() + "\n";
  } else if (format == "csv") {
    out = "index,coefficient\n";
    for (std::size_t i = 0; i < series.coefficients.size(); ++i)
      out += std::to_string(i) + "," + series.coefficients[i].str() + "\n";
  } else {
    for (std::size_t i = 0; i < series.coefficients.size(); ++i)
      out += std::to_string(i) + " " + series.coefficients[i].str() + "\n";
  }
  return out;
}

std::string run_frontal(int m, bool force) {
  const auto outputs = frontal_outputs(m, LockDiscipline::Loose,
                                       force ? std::max(m, kFrontalBound) : kFrontalBound);
  nlohmann::json out;
  out["m"] = m;
  out["count"] = std::to_string(outputs.size());
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : outputs) arr.push_back(p.str());
  out["outputs"] = arr;
  return out.dump() + "\n";
}

CommandReport run_verify(int max_n, int exhaustive_n, bool force, std::ostream& diag) {
  if (!force && max_n > kBruteForceBound)
    throw BoundExceeded("verify --max-n", max_n, kBruteForceBound);
  if (!force && exhaustive_n > kExhaustiveBound)
    throw BoundExceeded("verify --exhaustive-n", exhaustive_n, kExhaustiveBound);
  VerifyOptions opts;
  opts.max_n = max_n;
  opts.exhaustive_n = exhaustive_n;
  opts.witness_n = std::min(max_n, 7);
  opts.brute_bound = std::max(max_n, kBruteForceBound);
  opts.exhaustive_bound = std::max(exhaustive_n, kExhaustiveBound);
  const auto results = run_verification(opts, &diag);
  nlohmann::json checks = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    all_pass = all_pass && r.pass;
  }
  nlohmann::json out;
  out["all_pass"] = all_pass;
  out["checks"] = checks;
  return CommandReport{all_pass ? kExitOk : kExitMismatch, out.dump() + "\n"};
}

} // namespace

CommandReport execute(const std::vector<std::string>& args, std::ostream& diag) {
  CLI::App app{"Jump-queue simulator and enumerator for the permutation class Av(4231, 42513)"};
  app.name("jumpq");
  app.require_subcommand(1);

  std::string perm_text;
  std::string discipline_name = "loose";
  const auto add_perm_options = [&](CLI::App* cmd) {
    cmd->add_option("--perm", perm_text, "permutation in one-line notation, e.g. \"4 2 5 1 3\"")
        ->required();
    cmd->add_option("--discipline", discipline_name, "lock discipline")
        ->check(CLI::IsMember({"loose", "strict"}))
        ->capture_default_str();
  };
  auto* check_cmd =
      app.add_subcommand("check", "decide whether a permutation is producible");
  add_perm_options(check_cmd);
  auto* trace_cmd =
      app.add_subcommand("trace", "like check, but emit the full operation trace");
  add_perm_options(trace_cmd);

  int count_n = 0;
  std::string method;
  bool count_force = false;
  auto* count_cmd = app.add_subcommand("count", "number of producible permutations of length n");
  count_cmd->add_option("--n", count_n, "length")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--method", method, "counting method")
      ->required()
      ->check(CLI::IsMember({"bruteforce", "dp", "recurrence"}));
  count_cmd->add_flag("--force", count_force, "lift the brute-force bound");

  int series_terms = 0;
  std::string series_format = "plain";
  auto* series_cmd = app.add_subcommand("series", "emit f_0..f_N");
  series_cmd->add_option("--terms", series_terms, "last index N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--format", series_format, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();

  int verify_max_n = 8;
  int verify_exhaustive_n = 6;
  bool verify_force = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the full cross-check suite");
  verify_cmd->add_option("--max-n", verify_max_n, "characterization depth")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--exhaustive-n", verify_exhaustive_n, "greedy-vs-DFS depth")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_flag("--force", verify_force, "lift the factorial-cost bounds");

  int frontal_m = 0;
  bool frontal_force = false;
  auto* frontal_cmd =
      app.add_subcommand("frontal", "outputs reachable from a preloaded queue of 1..m");
  frontal_cmd->add_option("--m", frontal_m, "queue size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  frontal_cmd->add_flag("--force", frontal_force, "lift the frontal bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return CommandReport{kExitOk, app.help()};
  } catch (const CLI::ParseError& e) {
    diag << "error: " << e.what() << "\n\n" << app.help();
    return CommandReport{kExitInvalidInput, ""};
  }

  try {
    if (check_cmd->parsed()) return {kExitOk, run_check(perm_text, discipline_name, false)};
    if (trace_cmd->parsed()) return {kExitOk, run_check(perm_text, discipline_name, true)};
    if (count_cmd->parsed()) return {kExitOk, run_count(count_n, method, count_force)};
    if (series_cmd->parsed()) return {kExitOk, run_series(series_terms, series_format)};
    if (verify_cmd->parsed())
      return run_verify(verify_max_n, verify_exhaustive_n, verify_force, diag);
    if (frontal_cmd->parsed()) return {kExitOk, run_frontal(frontal_m, frontal_force)};
    diag << "error: no subcommand\n";
    return CommandReport{kExitInvalidInput, ""};
  } catch (const NotAPermutation& e) {
    diag << "error: not a permutation: " << e.what() << "\n";
    return CommandReport{kExitInvalidInput, ""};
  } catch (const BoundExceeded& e) {
    diag << "error: " << e.what() << " (pass --force to override)\n";
    return CommandReport{kExitBoundExceeded, ""};
  } catch (const std::exception& e) {
    diag << "internal error: " << e.what() << "\n";
    return CommandReport{1, ""};
  }
}

} // namespace jumpq
