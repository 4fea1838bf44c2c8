#include <iostream>
#include <string>
#include <vector>

#include "feynman_cli/cli.hpp"

int main(int argc, char** argv) {
  return feynman::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
