#pragma once

#include <iosfwd>

namespace spinchain::cli {

/// Parses argv, dispatches one subcommand and writes its result to `out`
/// (or the --output file). Returns 0 on success, 2 on invalid input and 1 on
/// numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinchain::cli
