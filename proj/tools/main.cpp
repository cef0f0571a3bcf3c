#include <iostream>
#include <string>
#include <vector>

#include "cmint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cmint::run_cli(args, std::cout, std::cerr);
}
