#include <iostream>

#include "wordrep/cli.hpp"

int main(int argc, char** argv) {
  return wordrep::cli::run(argc, argv, std::cout, std::cerr);
}
