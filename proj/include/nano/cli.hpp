#pragma once

// Command-line front end (`nanotop`).
//
//   nanotop [--format text|json] [--max-universe N] <command> ...
//
//   space  FILE [--h-family]             approximations, open/closed (and h-open) families
//   set    FILE SET [--ops LIST]         nint, ncl, ninth, nclh, is-hopen, is-hclosed of SET
//   map    FILE [--conditions]           map classification (and the h-continuity conditions)
//   verify [--max-space-size N] [--max-map-size N] [--workers N] [--fixtures DIR] [--timing]
//   mine   IMPLICATION [MAX_DOMAIN] [MAX_CODOMAIN] [--workers N] [--expect witness|none]
//
// Exit codes: 0 success, 1 a verification failed (or a mine expectation was
// not met), 2 parse/usage error, 3 validation error, 4 universe cap exceeded.

#include <ostream>
#include <string>
#include <vector>

namespace nano {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvalid = 3;
inline constexpr int kExitCap = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nano
