#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqaoa::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDomain = 3,
  kResource = 4,
};

// Runs one invocation; args excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqaoa::cli
