#pragma once

// Command-line front end. Every subcommand prints exactly one JSON object per
// line on `out` (bench prints one per instance) with a fixed key set; human
// diagnostics go to `err`.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure or
// conjecture violation.

#include <iosfwd>
#include <string>
#include <vector>

namespace cdec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Keys of every JSON record, in output order.
const std::vector<std::string>& record_keys();

}  // namespace cdec::cli
