#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motcalc::cli {

// Full command-line surface, callable in-process: `args` excludes the program
// name.  Returns the process exit code: 0 success, 1 domain/parse error or
// failed checks, 2 orbit cap exceeded, 3 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motcalc::cli
