#include <iostream>
#include <string>
#include <vector>

#include "dascent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dascent::run_cli(args, std::cout, std::cerr);
}
