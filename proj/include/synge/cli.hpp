#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synge::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes.
enum Exit : int {
    kOk = 0,
    kFailure = 1,      ///< failed verification or unexpected error
    kVacuum = 2,       ///< solve produced a vacuum solution
    kInput = 3,        ///< malformed JSON or flags
    kDomain = 4,
    kWindow = 5,
    kBracket = 6,
    kConvergence = 7,  ///< convergence or tolerance failure
};

/// Runs one subcommand. `args` excludes the program name. Data goes to `out`
/// unless --out is given; errors are written to `err` as JSON.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Entry point used by the executable.
int run(int argc, char** argv);

}  // namespace synge::cli
