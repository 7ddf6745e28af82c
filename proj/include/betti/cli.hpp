#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace betti {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitRefuted = 2,   // verify --strict saw a refuted claim
  kExitInternal = 3,  // arithmetic failure on valid input
};

/// Runs the tool on argv-style arguments (without the program name).
/// threads_env is the raw value of BETTI_GATE_THREADS, if set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& threads_env = std::nullopt);

}  // namespace betti
