#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmint {

enum ExitCode : int { kExitOk = 0, kExitDomainFailure = 1, kExitUsage = 2 };

/// Runs the command line front end on `args` (without the program name).
/// Reports go to `out`, diagnostics and errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmint
