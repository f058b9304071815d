#include <iostream>
#include <string>
#include <vector>

#include "slender/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slender::run_cli(args, std::cout, std::cerr);
}
