#pragma once

#include <iosfwd>

namespace daylens {

// Full command-line surface. Returns the process exit code: 0 success,
// 2 validation or input error, 1 internal error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace daylens
