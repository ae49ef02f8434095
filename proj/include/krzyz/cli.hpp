#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krzyz::cli {

/// Parse and execute one command line (without the program name).
/// Exit codes: 0 success (verdict passed where one applies), 1 failed
/// verdict, 2 usage or parameter errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace krzyz::cli
