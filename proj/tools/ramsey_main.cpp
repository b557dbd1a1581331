#include "ramsey/cli_app.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return ramsey::run_cli(args, std::cout, std::cerr);
}
