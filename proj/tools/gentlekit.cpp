#include <iostream>
#include <string>
#include <vector>

#include "gentlekit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gentlekit::cli::run(args, std::cin, std::cout, std::cerr);
}
