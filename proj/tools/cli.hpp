#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cayley::cli {

// Exit codes.
inline constexpr int kDefinitive = 0;
inline constexpr int kError = 1;
inline constexpr int kExhausted = 2;

// Runs one command. `args` excludes the program name. A single JSON document
// is written to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
