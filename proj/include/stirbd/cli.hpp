#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stirbd::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kFetch = 3 };

// args excludes the program name. Documents are read from in when a command
// needs one and no inline flag supplied it.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stirbd::cli
