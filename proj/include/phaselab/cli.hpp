#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phaselab {

// Entry point shared by the binary and the tests. Returns the process
// exit code: 0 success, 1 failed checks or internal errors, 2 bad input
// or configuration, 3 resource limits.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace phaselab
