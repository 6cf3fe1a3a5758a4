#include <iostream>

#include "kw4/cli.hpp"

int main(int argc, char** argv) {
  return kw4::run_cli(argc, argv, std::cout, std::cerr);
}
