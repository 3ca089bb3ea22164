#include <iostream>
#include <string>
#include <vector>

#include "qeuclid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qeuclid::cli::run(std::move(args), std::cout, std::cerr);
}
