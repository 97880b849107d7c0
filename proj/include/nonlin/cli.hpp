#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonlin {

/// Runs the command-line front end in-process. args excludes the program
/// name. Returns the process exit code: 0 success/value, 1 input error,
/// 2 semantic refusal (infeasible or unsupported integral).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonlin
