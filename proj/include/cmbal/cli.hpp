#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmbal {

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code:
/// 0 ok, 1 verification failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmbal
