#include "arcsep/cli.hpp"

int main(int argc, char** argv) { return arcsep::cli::run(argc, argv); }
