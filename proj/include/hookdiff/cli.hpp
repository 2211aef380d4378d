#pragma once

#include <iosfwd>

namespace hookdiff {

/// Command-line entry point. Returns 0 on success, 1 when a check finds a
/// counterexample and 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hookdiff
