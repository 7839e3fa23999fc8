#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace besse::cli {

// Dispatches one command line (args[0] is the program name). Writes results
// to out and diagnostics to err. Returns 0 on success, 1 on domain errors
// (e = 0, nontrivial c1 where triviality is required, ...), 2 on usage
// errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace besse::cli
