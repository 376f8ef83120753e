#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dfrieze {

enum ExitCode { kOk = 0, kUsage = 1, kInvalid = 2, kViolations = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dfrieze
