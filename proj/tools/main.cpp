#include <iostream>
#include <vector>

#include "tamedgk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tgk::run_cli(args, std::cout, std::cerr);
}
