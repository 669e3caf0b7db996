#include <iostream>
#include <string>
#include <vector>

#include "colorlab/tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return colorlab::tools::run_cli(args, std::cout, std::cerr);
}
