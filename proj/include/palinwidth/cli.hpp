#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palinwidth {

/// Exit codes of the command-line front end.
enum ExitCode { kOk = 0, kPropertyFailure = 1, kUsage = 2, kUnsupported = 3 };

/// Runs one palinwidth invocation. args excludes the program name. Words
/// come from the trailing argument, or one per line from `in` when absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace palinwidth
