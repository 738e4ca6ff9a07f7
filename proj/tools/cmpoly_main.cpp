#include <iostream>

#include "cmpoly/cli.hpp"

int main(int argc, char** argv) {
  return cmpoly::run_cli(argc, argv, std::cout, std::cerr);
}
