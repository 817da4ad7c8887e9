#pragma once

#include <vector>
#include <string>

namespace arcsep::cli {

// Exit codes: 0 success, 2 validation error (error JSON on stderr),
// 64 usage error, 70 internal failure.
int run(int argc, char** argv);
int run(const std::vector<std::string>& args);  // args without program name

}  // namespace arcsep::cli
