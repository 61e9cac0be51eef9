#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ballmodal::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // invalid, countermodel found, derivation rejected
  kUsage = 2,     // bad arguments, unreadable or malformed input
  kResource = 3,  // a valuation, frame or time cap was hit
};

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ballmodal::cli
