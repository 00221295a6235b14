#include <iostream>

#include "spos/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spos::cli::run(args, std::cout, std::cerr);
}
