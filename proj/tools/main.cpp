#include <iostream>

#include "lorentz/cli.hpp"

int main(int argc, char** argv) {
  return lorentz::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
