#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wcb {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed,
/// 2 usage or parse error, 3 verification stopped early (time limit).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wcb
