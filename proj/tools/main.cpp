#include <iostream>
#include <string>
#include <vector>

#include "smw/workbench/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smw::cli_dispatch(args, std::cout, std::cerr);
}
