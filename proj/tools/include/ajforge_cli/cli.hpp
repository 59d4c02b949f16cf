#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ajforge::cli {

enum ExitCode
{
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
};

/// Runs one command line (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ajforge::cli
