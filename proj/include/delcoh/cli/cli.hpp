#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delcoh::cli {

// Exit codes of the command line tool.
enum ExitCode : int {
    Success = 0,
    InvalidInput = 1,      // parse or validation error
    UnknownName = 2,       // a name that does not resolve
    Precondition = 3,      // well-formed input violating a mathematical precondition
    VerificationFailed = 4 // verify ran and at least one check failed
};

// Runs one command. `args` excludes the program name. DELCOH_SEED, when set,
// overrides --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delcoh::cli
