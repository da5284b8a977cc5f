#include <iostream>
#include <string>
#include <vector>

#include "hfib/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hfib::cli::run(args, std::cout, std::cerr);
}
