#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tollhull::cli {

enum ExitCode : int {
  kOk = 0,
  kUserError = 1,
  kInvariant = 2,
  kMismatch = 3,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tollhull::cli
