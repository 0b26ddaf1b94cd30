#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixedpoint::cli {

/// Process exit codes.
enum ExitCode : int {
    kPass = 0,
    kFail = 1,
    kInputError = 2,
    kNodeCapExceeded = 3,
};

/// Runs the command line (args excludes the program name) and returns the
/// exit code. stdin is only read for the "-" path.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace fixedpoint::cli
