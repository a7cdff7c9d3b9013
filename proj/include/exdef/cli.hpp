#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exdef::cli {

/// Runs one CLI invocation; `args` excludes the program name.  Reports go
/// to `out` (JSON by default, CSV for table commands with --format csv),
/// usage errors to `err`.  Returns the process exit code: 0 on success,
/// 1 on execution errors (with a machine-readable error object on `out`),
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace exdef::cli
