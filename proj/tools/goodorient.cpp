#include <iostream>
#include <string>
#include <vector>

#include "goodorient/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return goodorient::run_cli(args, std::cout, std::cerr);
}
