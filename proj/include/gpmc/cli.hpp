#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpmc {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

// Environment variable holding the default --jobs value.
inline constexpr const char* kJobsEnvVar = "GPMC_JOBS";

// Runs one command line (args exclude the program name). Reports go to
// `out` unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gpmc
