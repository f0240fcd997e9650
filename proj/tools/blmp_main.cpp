#include <iostream>
#include <string>
#include <vector>

#include "blmp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return blmp::run_cli(args, std::cout, std::cerr);
}
