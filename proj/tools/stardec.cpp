#include <exception>
#include <iostream>

#include "stardec/cli.hpp"

int main(int argc, char** argv) {
  try {
    return stardec::run_cli(argc, argv, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
