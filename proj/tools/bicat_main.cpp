#include <iostream>

#include "bicat/cli.hpp"

int main(int argc, char** argv) {
  return bicat::run_cli(argc, argv, std::cout, std::cerr);
}
