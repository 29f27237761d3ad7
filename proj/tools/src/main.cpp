#include "painleve/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return painleve::cli::cli_main(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
