#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dstm {

// Dispatches one command line (without the program name) and writes the
// report to `out` and diagnostics to `err`. Exit codes: 0 when every check
// in the selected command passes, 1 on an assertion failure, 2 on a usage
// error, 3 on an input error.
int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace dstm
