#pragma once

#include <ostream>
#include <span>
#include <string>

namespace mintrans::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotDual = 1;
inline constexpr int kExitMalformedInstance = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitOverflow = 70;

/// Above this many vertices `--auto-k vc` needs --force.
inline constexpr std::size_t kAutoVcVertexLimit = 25;

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out`, diagnostics to `err`; returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mintrans::cli
