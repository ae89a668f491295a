#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ytg::cli {

enum ExitCode : int {
    Ok = 0,
    CheckFailed = 1,  // paper-examples found a mismatch
    UsageError = 2,   // unknown subcommand, bad flag, malformed input text
    DomainError = 3,  // well-formed input outside the operation's contract
    BudgetError = 4,  // enumeration limit exceeded
    InternalError = 5,
};

// `args` excludes the program name. Results go to `out`; errors go to `err` as
// one line of JSON {"error": kind, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ytg::cli
