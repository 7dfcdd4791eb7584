#ifndef DOMSET_CLI_CLI_HPP
#define DOMSET_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace domset::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalid = 2,
  kExitGuard = 3,
};

/// Runs one subcommand. `args` excludes the program name. Counts and
/// documents go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domset::cli

#endif  // DOMSET_CLI_CLI_HPP
