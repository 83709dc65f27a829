#include <iostream>
#include <string>
#include <vector>

#include "boundarykit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return boundarykit::cli_main(args, std::cout, std::cerr);
}
