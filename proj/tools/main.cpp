#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "mspace/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  mspace::cli::RunOptions options;
  options.default_format = isatty(STDOUT_FILENO) ? mspace::cli::Format::Text : mspace::cli::Format::Json;
  return mspace::cli::run(args, std::cin, std::cout, std::cerr, options);
}
