#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqk::cli {

enum ExitCode { ok = 0, verification_failure = 1, usage_error = 2 };

// Runs one command line (argv[0] is the program name). Output goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqk::cli
