#include <iostream>

#include "factorkit/cli.hpp"

int main(int argc, char** argv) {
  return factorkit::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
