#include <iostream>

#include "dfrieze/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dfrieze::run_cli(args, std::cout, std::cerr);
}
