#include <iostream>

#include "jw/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jw::cli::run(args, std::cout, std::cerr);
}
