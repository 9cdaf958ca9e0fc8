#pragma once

#include <iosfwd>

namespace omt::cli {

/// Exit codes: 0 success, 1 a check failed, 2 usage, parse or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omt::cli
