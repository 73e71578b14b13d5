#ifndef LTDIM_CLI_HPP
#define LTDIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ltdim {

/// Exit codes of the command-line driver.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitOracleLimits = 2,
    kExitOracleMismatch = 3,
};

/// Runs the `ltdim` command line. `args` excludes the program name.
///
///     dims <file> [--trials T] [--seed S] [--oracle] [--report] [--verbose]
///     score <file> --loglik L --n N [--de D] [--trials T] [--seed S]
///     regularize <file>
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ltdim

#endif  // LTDIM_CLI_HPP
