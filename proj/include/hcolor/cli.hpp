#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcolor::cli {

/// Runs one command line (program name excluded). Returns 0 on success, 1 when
/// `decide` answers no, 2 on usage, input or solver errors (message on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcolor::cli
