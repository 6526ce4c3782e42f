#include <iostream>
#include <string>
#include <vector>

#include "bridgetri/io/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bridgetri::io::run_cli(args, {std::cin, std::cout, std::cerr});
}
