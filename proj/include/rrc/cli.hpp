#pragma once

#include <iosfwd>

namespace rrc {

/// Exit codes: 0 all Pass, 1 any Fail, 2 usage or parameter error,
/// 3 Inconclusive without any Fail.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rrc
