#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kconn {

/// Runs the command line (without the program name) and returns the exit
/// status: 0 clean, 1 violations found, 2 usage or input errors.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kconn
