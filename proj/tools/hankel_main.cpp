#include <iostream>
#include <string>
#include <vector>

#include "hankel/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return hankel::cli::run(args, std::cout, std::cerr);
}
