#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sexticlab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kBadInput = 2 };

/// Runs one command line (args excludes the program name). The seed comes
/// from SEXTICLAB_SEED unless --seed is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sexticlab::cli
