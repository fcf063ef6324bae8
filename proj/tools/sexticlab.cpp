#include <iostream>

#include "sexticlab/cli.hpp"

int main(int argc, char** argv) {
  return sexticlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
