#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bandit_lab::cli {

// Runs the command line `args` (args[0] is the program name). Returns the
// process exit code: 0 on success, 1 on a runtime failure, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bandit_lab::cli
