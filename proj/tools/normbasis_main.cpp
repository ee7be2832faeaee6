#include <iostream>

#include "normbasis/cli.hpp"

int main(int argc, char** argv) {
  return normbasis::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
