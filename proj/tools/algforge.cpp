#include "algforge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return algforge::run(args, std::cin, std::cout, std::cerr);
}
