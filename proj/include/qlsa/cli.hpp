#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlsa::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalid = 1,       // parse, validation or precondition error
    kInfeasible = 2,    // no admissible surface-code scheme
    kVerifyFailed = 3,  // a verification lab found a violation
};

/// Runs one command line (without the program name). Summaries go to `out`,
/// diagnostics to `err`; data files are written where --out points.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlsa::cli
