#ifndef ULTRA_CLI_HPP
#define ULTRA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ultra::cli {

// Exit codes: 0 success or true verdict, 1 false verdict, 2 bad input.
inline constexpr int exit_true = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_error = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ultra::cli

#endif  // ULTRA_CLI_HPP
