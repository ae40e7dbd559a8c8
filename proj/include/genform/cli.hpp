#pragma once

// Command-line surface. Exposed as a function over an argument vector so
// the exit-code contract (0 ok, 1 error, 2 expectation mismatch) and the
// rendered output are directly testable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace genform {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace genform
