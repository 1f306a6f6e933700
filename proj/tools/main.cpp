// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const int status = forget::cli::run(argc, argv, std::cin, std::cout, std::cerr);
  std::cout.flush();
  return std::cout ? status : forget::cli::kIoError;
}
