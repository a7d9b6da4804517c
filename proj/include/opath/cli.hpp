#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opath {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;  // unexpected failure
inline constexpr int kExitUsage = 2;    // unknown flag / bad invocation
inline constexpr int kExitIo = 3;       // unreadable or unwritable file
inline constexpr int kExitData = 4;     // config validation or input-data failure

/// Command-line entry point: subcommands solve, experiment, sweep-n,
/// sweep-sigma, render. Returns one of the kExit* codes; diagnostics go to
/// `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests; `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opath
