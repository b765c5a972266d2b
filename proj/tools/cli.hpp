#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopforge::cli {

/// Exit codes: 0 success (verified loop, passing check, or output written),
/// 1 no loop found or a check failed, 2 usage, parse or internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loopforge::cli
