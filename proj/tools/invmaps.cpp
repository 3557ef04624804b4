#include <iostream>
#include <string>
#include <vector>

#include "invmaps/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return invmaps::dispatch(args, std::cout, std::cerr);
}
