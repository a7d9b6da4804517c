#include <iostream>

#include "opath/cli.hpp"

int main(int argc, char** argv) {
  return opath::cli_main(argc, argv, std::cout, std::cerr);
}
