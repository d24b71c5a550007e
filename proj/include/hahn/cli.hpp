#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hahn {

// Exit codes of the hahn tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

// Runs `hahn <args...>` (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hahn
