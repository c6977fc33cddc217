#include <iostream>
#include <string>
#include <vector>

#include "hgpd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hgpd::dispatch(args, std::cout, std::cerr);
}
