#pragma once

#include <iosfwd>

namespace csl::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error, 3 failed verification.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csl::cli
