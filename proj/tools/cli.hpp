#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace feaslab::cli {

/// Runs one command line (args[0] is the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace feaslab::cli
