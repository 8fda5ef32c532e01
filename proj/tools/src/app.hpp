#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sunflower::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kBudgetExhausted = 2,
    kInternalError = 3,
    kUsage = 64,
};

/// Parses argv (argv[0] is the program name), runs one subcommand and
/// returns its exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace sunflower::cli
