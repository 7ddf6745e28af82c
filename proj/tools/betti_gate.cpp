#include "betti/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> threads;
  if (const char* env = std::getenv("BETTI_GATE_THREADS")) threads = env;
  return betti::run_cli(args, std::cout, std::cerr, threads);
}
