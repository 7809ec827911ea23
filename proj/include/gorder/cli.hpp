#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gorder::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

/// Runs one command line (without the program name). Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gorder::cli
