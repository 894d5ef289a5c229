#include <iostream>

#include "gswitch/io/cli.hpp"

int main(int argc, char** argv) {
  return gswitch::run_cli(argc, argv, std::cout, std::cerr);
}
