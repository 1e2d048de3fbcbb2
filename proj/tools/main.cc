#include <iostream>
#include <string>
#include <vector>

#include "formgen/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return formgen::cli::Run(args, std::cout, std::cerr);
}
