#include <iostream>
#include <string>
#include <vector>

#include "cubicdio/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cubicdio::cli::run(args, std::cout, std::cerr);
}
