#include <iostream>
#include <string>
#include <vector>

#include "hklab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hklab::run(args, std::cout, std::cerr);
}
