#include <iostream>

#include "afflat/cli.hpp"

int main(int argc, char** argv) {
  return afflat::cli::run({argv + 1, argv + argc}, std::cin, std::cout);
}
