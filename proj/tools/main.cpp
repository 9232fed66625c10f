#include <iostream>

#include "polarcsm/cli.hpp"

int main(int argc, char** argv) {
  return polarcsm::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
