#pragma once

#include <iosfwd>

namespace heokit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_config = 2;

/// Entry point of the `heokit` tool. Subcommands: bench, engineer, tune,
/// rank, list. Returns 0 on success, 2 on configuration errors (unknown
/// names, bad flag values) and 1 on runtime failures.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace heokit::cli
