#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnfkit::cli {

enum ExitCode : int { ok = 0, domain_violation = 1, usage_error = 2, scale_refusal = 3 };

/// Longest word accepted as a command-line argument; longer words go through files or stdin.
inline constexpr std::size_t kArgumentWordLimit = 4096;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pnfkit::cli
