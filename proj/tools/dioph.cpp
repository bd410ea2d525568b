#include <iostream>

#include "dioph/cli.hpp"

int main(int argc, char** argv) {
  return dioph::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
