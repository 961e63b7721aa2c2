#include <iostream>
#include <string>
#include <vector>

#include "tight/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tight::cli::run(args, std::cout, std::cerr).exit_code;
}
