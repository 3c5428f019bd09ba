#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braids::cli {

// Exit statuses shared by every subcommand.
inline constexpr int ok = 0;
inline constexpr int verdict_false = 1;
inline constexpr int input_error = 2;

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; nothing is written to the process streams.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace braids::cli
