#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperhall {

enum ExitCode : int
{
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitInputError = 2,
};

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperhall
