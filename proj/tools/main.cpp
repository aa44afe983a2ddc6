#include <iostream>

#include "treegray/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return treegray::run_cli(argc, argv, std::cout, std::cerr);
}
