#include <iostream>

#include "costpcf/app.hpp"

int main(int argc, char** argv) {
  return costpcf::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
