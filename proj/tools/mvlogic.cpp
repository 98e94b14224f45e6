#include <iostream>

#include "mvlogic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvlogic::cli::run(args, std::cout, std::cerr);
}
