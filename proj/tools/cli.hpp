// Command-line front end, callable in-process for testing.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fcc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kIoError = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcc::cli
