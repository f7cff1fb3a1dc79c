#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace octabasic::cli {

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 when a verification fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octabasic::cli
