#include <iostream>

#include "polyadica/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return polyadica::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
