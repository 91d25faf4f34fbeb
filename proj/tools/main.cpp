#include <iostream>
#include <string>
#include <vector>

#include "masaent/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return masaent::run_cli(args, std::cout, std::cerr);
}
