#ifndef ATWOOD_TOOLS_CLI_HPP
#define ATWOOD_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace atwood::cli {

inline constexpr const char* kArtifact = "atwood";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode { kOk = 0, kFailure = 1, kObstruction = 2, kBadConfig = 3 };

// Runs one subcommand; args excludes the program name. Diagnostics go to err,
// progress lines to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atwood::cli

#endif  // ATWOOD_TOOLS_CLI_HPP
