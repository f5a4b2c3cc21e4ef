#include "saxl/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return saxl::run_cli(argc, argv, std::cout, std::cerr);
}
