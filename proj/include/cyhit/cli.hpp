// Command-line front end. Every subcommand produces a VerificationReport, printed
// as JSON on `out`, with a readable summary on `err`.
//
// Exit status: 0 all checks passed, 1 some check failed, 2 usage error or a
// violated precondition.
#pragma once

#include "cyhit/report.hpp"

#include <cstdint>
#include <iosfwd>

namespace cyhit {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Default seed: the CYHIT_SEED environment variable if set, else 0.
std::uint64_t default_seed();

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyhit
