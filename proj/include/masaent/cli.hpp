#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace masaent {

/// Full command-line front end, stream-injected for testability.
/// Exit codes: 0 success, 1 mathematical validation or verification
/// failure, 2 unusable input (arguments, files, documents).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace masaent
