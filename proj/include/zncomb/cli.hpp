#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zn::cli {

/// Exit codes of `run`.
inline constexpr int kOk = 0;
inline constexpr int kFinding = 1;
inline constexpr int kUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Data goes to
/// `out`; diagnostics and FINDING summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "8,9,10" or "6..1024" or a mix such as "3,6..9".
std::vector<std::size_t> parse_k_list(const std::string& text);

}  // namespace zn::cli
