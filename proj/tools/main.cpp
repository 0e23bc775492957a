#include <iostream>
#include <string>
#include <vector>

#include "gl3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gl3::run_command(args, std::cout, std::cerr);
}
