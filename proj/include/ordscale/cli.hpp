// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace ordscale::cli {

//! Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

//! Entry point of the `ordscale` tool with subcommands estimate, simulate,
//! tables and schemes. Writes results to `out` and diagnostics to `err`.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordscale::cli
