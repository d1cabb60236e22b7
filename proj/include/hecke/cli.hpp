#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke {

// Exit codes of the command line surface.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

// Runs one invocation. args excludes the program name. All output goes to
// the given streams; for fixed (args, seed) the JSON output on out is
// byte-identical across runs.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hecke
