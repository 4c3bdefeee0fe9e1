#include <iostream>
#include <vector>

#include "hopfq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopfq::run_cli(args, std::cout, std::cerr);
}
