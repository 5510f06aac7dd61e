#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latred {

/// Command-line entry point, separated from main() so tests can drive it.
/// Exit codes: 0 success, 2 parse/validation failures (incompatible or
/// indefinite input included), 3 iteration cap exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace latred
