#pragma once

#include <string>
#include <vector>

namespace dist2 {

// Stable exit codes of the command line surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitNonPlanar = 2;
inline constexpr int kExitDegree = 3;
inline constexpr int kExitInternalAssertion = 4;
inline constexpr int kExitInvalidColoring = 5;
inline constexpr int kExitSizeBound = 6;

/// Runs the CLI on the given arguments (program name excluded), writing to
/// the given streams. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err);

/// Convenience wrapper printing to stdout/stderr.
int run_cli_main(int argc, char** argv);

}  // namespace dist2
