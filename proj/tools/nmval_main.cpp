#include <iostream>
#include <string>
#include <vector>

#include "nmval/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nmval::cli::run(args, std::cout, std::cerr);
}
