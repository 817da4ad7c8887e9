#include "arcsep/cli.hpp"

#include <cstdio>

namespace arcsep::cli {

int run(const std::vector<std::string>&) {
  std::fprintf(stderr, "arcsep: not wired up yet\n");
  return 64;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace arcsep::cli
