#include <iostream>
#include <string>
#include <vector>

#include "fracops/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fracops::run_cli(args, std::cout, std::cerr);
}
