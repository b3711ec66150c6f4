#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  return slownim::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
