#ifndef JUMPQ_CLI_HPP
#define JUMPQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jumpq {

/// Result of one CLI invocation. `output` is the machine-parseable payload
/// for the result stream; diagnostics go to the stream passed to execute().
/// Exit codes: 0 success, 2 invalid input, 3 verification mismatch,
/// 4 bound exceeded.
struct CommandReport {
  int exit_code = 0;
  std::string output;
};

/// Runs one command line (without the program name).
CommandReport execute(const std::vector<std::string>& args, std::ostream& diagnostics);

} // namespace jumpq

#endif
