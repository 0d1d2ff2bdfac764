#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace podbond::cli {

enum ExitCode : int { kOk = 0, kMalformed = 2, kVerificationFailed = 3, kDegenerate = 4 };

/// Runs one podbond command. args excludes the program name. JSON goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace podbond::cli
