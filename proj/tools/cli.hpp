#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mawkit::cli {

/// Exit codes of the mawkit tool.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // an identity or bound check reported a failure
  kUsage = 2,        // bad flags, malformed words, symbols outside the alphabet
  kNone = 3,         // `defines`: no word satisfies the system
  kMultiple = 4,     // `defines`: more than one word satisfies the system
  kRuntime = 5,      // budget exceeded, inconclusive search, overflow
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mawkit::cli
