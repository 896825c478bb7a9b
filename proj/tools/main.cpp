#include <iostream>
#include <string>
#include <vector>

#include "weylwords/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return weylwords::run_cli(args, std::cout, std::cerr);
}
