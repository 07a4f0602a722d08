#include <iostream>

#include "biheyt/cli.hpp"

int main(int argc, char** argv) {
  return biheyt::cli::run(argc, argv, std::cout, std::cerr);
}
