#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncinv {

enum ExitCode { exit_ok = 0, exit_verification_failed = 1, exit_invalid_input = 2 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; returns the process exit status.
/// NCINV_THREADS in the environment sets the default worker count.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncinv
