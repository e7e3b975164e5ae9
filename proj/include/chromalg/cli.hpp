#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromalg::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Default seed of the randomized verification suites.
inline constexpr unsigned long long kDefaultSeed = 20240611ULL;

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromalg::cli
