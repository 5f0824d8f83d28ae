#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgrowth {

// Runs the command-line tool. Exit codes: 0 all checks pass, 1 a verification
// reported a violation, 2 usage or load error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qgrowth
