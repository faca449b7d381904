#include <iostream>

#include "ngroup/cli.hpp"

int main(int argc, char** argv) {
  return ngroup::cli::run(argc, argv, std::cout, std::cerr);
}
