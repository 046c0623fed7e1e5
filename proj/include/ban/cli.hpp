#pragma once

#include <ostream>
#include <span>
#include <string>

namespace ban::cli {

/// Exit codes of the `ban` tool.
enum ExitCode : int {
    kOk = 0,
    kFinding = 1,     // an analysis finding under --strict / --forbid
    kInputError = 2,  // unreadable or malformed input, or a size limit hit
};

/// Runs the tool on `args` (without the program name). Output for identical
/// arguments and inputs is byte-identical.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ban::cli
