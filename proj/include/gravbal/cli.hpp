#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gravbal {

// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUnbalanced = 1;  // `check` found a non-constant energy
inline constexpr int kExitUsage = 2;       // bad arguments, config or I/O

/// Runs `gravbal {solve|check|sweep|trajectory|study} --config <path> [--out <dir>]`.
/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gravbal
