#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace effbound {

enum ExitCode : int {
    kExitOk = 0,
    kExitDomainError = 1,
    kExitUsage = 2,
    kExitOracleMismatch = 3,
};

/// Runs one subcommand; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace effbound
