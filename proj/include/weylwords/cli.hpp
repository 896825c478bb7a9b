#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "weylwords/roots.hpp"

namespace weylwords {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses either simple-root coefficients "1,2,2,3,2,1" or, for classical
/// types, a symbolic root such as "e1+e3", "2e2", "e2-e4". Throws Parse
/// or NotARoot; the result is a positive root.
Root parse_root_spec(const RootSystem& sys, std::string_view spec);

}  // namespace weylwords
