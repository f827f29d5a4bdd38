#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srsdual::cli {

// Exit codes: 0 decided yes or success, 1 decided no, 2 error or
// unsupported input class.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace srsdual::cli
