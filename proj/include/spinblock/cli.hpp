#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinblock {

// Exit codes of the command line front end.
enum ExitCode { kExitOk = 0, kExitInternal = 1, kExitValidation = 2 };

// Parses the arguments (without the program name), dispatches one subcommand and writes
// the report to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinblock
