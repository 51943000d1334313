#pragma once

#include <iosfwd>

namespace wittrep {

/// Entry point of the wittrep command, usable in-process. Exit codes:
/// 0 all checks pass, 1 a check failed, 2 parse error, 3 configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wittrep
