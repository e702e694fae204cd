#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sandpile::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsage = 2,
    kResourceLimit = 3,
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sandpile::cli
