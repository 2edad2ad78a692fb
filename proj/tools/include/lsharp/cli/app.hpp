#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsharp::cli {

/// Runs one `lsharp` invocation (args exclude the program name).
/// Reports go to `out`; diagnostics and timing to `err`.
/// Exit status: 0 all checks pass, 1 a check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsharp::cli
