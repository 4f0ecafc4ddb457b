#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace so3x8::cli {

/// Runs one command of the `so3x8` tool against the given streams and
/// returns the process exit code: 0 on success, 1 when a verification or
/// library check fails, 2 on usage errors.  `args` excludes the program
/// name.  Kept separate from main() so the whole surface is testable
/// in-process.
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace so3x8::cli
