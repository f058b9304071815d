#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slender {

/// Runs one CLI invocation (argv without the program name).
/// Exit codes: 0 success / property holds; 1 property violated or
/// no-solution verdict where a solution was requested; 2 usage or parse
/// error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slender
