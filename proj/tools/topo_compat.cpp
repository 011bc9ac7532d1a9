#include <iostream>
#include <string>
#include <vector>

#include "topocompat/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return topo::cli::run(args, std::cout, std::cerr);
}
