#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kchoose::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kError = 2, kBudget = 3 };

/// Runs one command line; JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kchoose::cli
