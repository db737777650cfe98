#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wreathcert::cli {

// Runs one command line (without the program name). Exit codes: 0 on
// success, 1 when a check or construction fails, 2 on bad usage or
// unreadable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wreathcert::cli
