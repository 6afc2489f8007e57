#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace jfrt::cli {

/// Runs the command line (args[0] is the program name). Returns the process
/// exit code: 0 success, 2 parse or validation error, 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:step" (inclusive) or a comma list.
std::vector<double> parse_grid(std::string_view text);

}  // namespace jfrt::cli
