#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ech::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kObstructed = 2 };

// Runs one invocation. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ech::cli
