#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetmod::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kMalformedInput = 2 };

/// Runs one command line (without the program name). Documents go to
/// `out` (or the output directory), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace posetmod::cli
