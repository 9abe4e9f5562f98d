#include <iostream>
#include <string>
#include <vector>

#include "milnor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const milnor::cli::Outcome o = milnor::cli::run(args);
  std::cout << o.out;
  std::cerr << o.err;
  return o.code;
}
