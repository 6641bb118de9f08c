#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthoconf {

namespace exit_code {
inline constexpr int stable = 0;
inline constexpr int ok = 0;
inline constexpr int strictly_semistable = 10;
inline constexpr int unstable = 20;
inline constexpr int input_error = 2;
inline constexpr int cap_exceeded = 3;
inline constexpr int internal_error = 4;
}  // namespace exit_code

// Runs one command. `args` includes the program name. Writes a single JSON
// object to `out` and diagnostics to `err`; `in` backs `--input -`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orthoconf
