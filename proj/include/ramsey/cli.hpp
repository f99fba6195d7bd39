#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    malformed_input = 1,    // unparsable flags, JSON or object specs
    structured_error = 2,   // cap exceeded, invalid input, unsupported request
    check_failed = 3,       // selftest or verify-scheme found failures
};

/// Runs one command line (without the program name). Results go to `out` as
/// JSON, diagnostics for malformed input go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
