#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symclass::cli {

enum ExitCode : int { Success = 0, DomainFailure = 1, OracleFailure = 2 };

// Runs the command line `args` (program name excluded). Normal output goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symclass::cli
