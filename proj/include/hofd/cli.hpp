#pragma once

// Command-line front end: `eval`, `verify` and `table`.

#include <iosfwd>

namespace hofd {

/// Exit codes: 0 success, 1 computation or check failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hofd
