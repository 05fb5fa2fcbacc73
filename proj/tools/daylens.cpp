#include <iostream>

#include "daylens/cli.hpp"

int main(int argc, char* argv[]) {
  return daylens::run_cli(argc, argv, std::cout, std::cerr);
}
