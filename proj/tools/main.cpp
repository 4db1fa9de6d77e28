#include <iostream>
#include <string>
#include <vector>

#include "divexp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return divexp::cli::run(args, std::cin, std::cout);
}
