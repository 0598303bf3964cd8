#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steinitz::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kInputError = 2, kCheckFailure = 3 };

// Runs one command line (without the program name). Output is a pure
// function of the arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinitz::cli
