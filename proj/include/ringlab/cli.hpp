#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringlab::cli {

/// Exit codes: 0 success, 1 unexpected VIOLATION, 2 bad input, 3 internal bug.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ringlab::cli
