#include <iostream>
#include <string>
#include <vector>

#include "optstab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return optstab::run_cli(args, std::cout, std::cerr);
}
