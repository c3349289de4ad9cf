#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srsk::cli {

/// Runs the tool on `args` (without the program name). Returns 0 on success,
/// 1 when a verification finds failures and 2 on bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srsk::cli
