#include <iostream>
#include <string>
#include <vector>

#include "udeform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return udeform::cli::run(args, std::cout, std::cerr);
}
