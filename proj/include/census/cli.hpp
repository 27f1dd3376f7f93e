#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace census::cli {

// Runs the command line given as args (without the program name), writing
// reports to out and notes/diagnostics to err. Returns 0 on success, 1 on
// usage errors, 2 on internal invariant violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace census::cli
