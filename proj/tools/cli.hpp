#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace q2::cli {

enum ExitCode : int { Ok = 0, IdentityFailure = 1, Usage = 2, Constraint = 3 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3" or "1..6"; throws std::invalid_argument on anything else.
std::vector<int> parse_p_range(const std::string& text);

}  // namespace q2::cli
