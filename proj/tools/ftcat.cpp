#include <iostream>

#include "ftcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ftcat::run(args, std::cout, std::cerr);
}
