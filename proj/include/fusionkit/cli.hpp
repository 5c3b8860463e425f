#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fusionkit/adjoint_rules.hpp"

namespace fusionkit::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kDomainError = 3,
    kMismatch = 4,
    kNoClosedForm = 5,
};

/// Runs the command line `args` (without the program name). Records go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rebuilds a decomposition from one `fuse --json` record line.
/// Throws ParseError on malformed input.
FusionDecomposition decomposition_from_record(const std::string& line);

}  // namespace fusionkit::cli
