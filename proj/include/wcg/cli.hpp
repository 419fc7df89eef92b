#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wcg::cli {

/// Entry point behind the `wcg` binary. `args` excludes the program name.
/// Exit codes: 0 success, 1 check failed / mismatches found, 2 bad flags,
/// 3 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcg::cli
