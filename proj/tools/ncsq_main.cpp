#include <iostream>
#include <string>
#include <vector>

#include "ncsq/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ncsq::run_cli(args, std::cout, std::cerr);
}
