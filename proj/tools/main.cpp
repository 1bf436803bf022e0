#include <iostream>

#include "personick_cli/cli.hpp"

int main(int argc, char** argv) {
  try {
    return personick::cli::main_entry(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return 1;
  }
}
