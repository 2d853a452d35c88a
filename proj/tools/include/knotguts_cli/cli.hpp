#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotguts::cli {

enum ExitCode { kSuccess = 0, kUsage = 1, kInputError = 2, kHypothesisNotMet = 3 };

// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotguts::cli
