#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace partprod::cli {

enum ExitCode : int {
    kPass = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kMarginal = 3,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --out redirects it; diagnostics and progress go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partprod::cli
