#include <iostream>

#include "nielsen/cli.hpp"

int main(int argc, char** argv) {
  return nielsen::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
