#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starkit::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs one invocation; args excludes the program name. Text goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starkit::cli
