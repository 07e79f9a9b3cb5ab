#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbx::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,     // malformed input file or command line
  kNotPlanar = 2,      // planarity: consistent, no linear witness
  kIoError = 3,
  kInconsistent = 4,   // planarity: RGB = {1}
};

// Runs the gbx command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbx::cli
