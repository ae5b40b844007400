#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cozero {

/// Runs one invocation; args exclude the program name.  Returns the exit code:
/// 0 ok, 1 verification failure, 2 usage or parse error, 3 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cozero
