#include <iostream>
#include <string>
#include <vector>

#include "addspec/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return addspec::cli::main(args, std::cout, std::cerr);
}
