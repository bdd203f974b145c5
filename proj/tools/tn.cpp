#include "tn/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* cfg = std::getenv("TN_CONFIG");
  return tn::run_cli(args, std::cout, std::cerr, cfg ? cfg : "");
}
