#pragma once

// Command-line front end, callable in-process so tests can compare outputs.

#include <iosfwd>
#include <vector>
#include <string>

namespace curveh::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,  // a theorem check failed or errored, or an internal error
    kUsage = 2,         // unparsable input, bad flag, unknown name
    kNonReduced = 3,
    kUncertified = 4,
    kCertification = 5, // construction could not certify genericity
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curveh::cli
