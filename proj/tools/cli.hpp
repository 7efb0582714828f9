#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trimult::cli {

enum ExitCode : int {
  ok = 0,
  mismatch = 1,
  invalid_input = 2,
  divergence = 3,
  network = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trimult::cli
