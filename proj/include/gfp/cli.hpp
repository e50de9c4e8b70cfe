#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfp::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDisagreement = 1,  // a mathematical check failed
    kUsage = 2,
};

/// Runs one command line (without the program name), writing JSON lines or
/// CSV to `out` and diagnostics to `err`. Output is deterministic.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfp::cli
