#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ocd::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kLimitExceeded = 3,  // solver cap or --max-k bound
};

// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ocd::cli
