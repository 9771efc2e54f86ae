#pragma once

#include <iosfwd>

namespace dglcl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Subcommands: classify, simulate, bounds, figures. Errors go to `err` as
// "ERROR:<code>: message"; returns 0, 1 (usage) or 2 (data).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dglcl
