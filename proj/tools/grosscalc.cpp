#include "grossone/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return grossone::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
