#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivo::cli {

/// Runs the command line `args` (without the program name) and returns the
/// process exit status: 0 ok, 1 verification failure, 2 input error,
/// 3 cap exceeded, 4 infeasible enumeration.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivo::cli
