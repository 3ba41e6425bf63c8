#include <iostream>

#include "schurlab/cli.hpp"

int main(int argc, char** argv) {
  return schurlab::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
