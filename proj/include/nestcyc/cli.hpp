#pragma once

#include <iosfwd>

namespace nestcyc {

/// Exit codes: 0 success or PASS, 1 clean negative, 2 input error,
/// 3 internal invariant violation.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nestcyc
