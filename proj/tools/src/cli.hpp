#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncp::cli {

/// Runs one `ncp` invocation. `args` excludes the program name. Returns the
/// exit status: 0 success, 1 domain error (JSON on `err`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncp::cli
