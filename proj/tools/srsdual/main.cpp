#include <iostream>

#include "srsdual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return srsdual::cli::run_command(args, std::cin, std::cout, std::cerr);
}
