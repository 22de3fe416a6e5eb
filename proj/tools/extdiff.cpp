#include <iostream>

#include "extdiff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return extdiff::run(args, std::cout, std::cerr);
}
