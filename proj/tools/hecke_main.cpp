#include <iostream>
#include <vector>

#include "hecke/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hecke::run(args, std::cout, std::cerr);
}
