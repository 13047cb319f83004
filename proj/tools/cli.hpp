#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gallagher::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kParameter = 2,
    kViolation = 3,
};

/// Parses argv (program name first) and runs one subcommand. CSV goes to
/// `out` unless --out names a file; diagnostics and usage go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gallagher::cli
