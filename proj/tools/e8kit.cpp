#include <iostream>

#include "e8kit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return e8kit::run_cli(args, std::cout, std::cerr);
}
