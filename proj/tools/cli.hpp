#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phimod::cli {

enum ExitCode : int { Ok = 0, ValidationFailure = 1, FieldTooSmallExit = 2 };

/// Runs one job. `args` excludes the program name. Reports go to `out`
/// (or to --out), usage problems to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phimod::cli
