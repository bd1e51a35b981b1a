#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ocad::cli {

/// Runs one ocad invocation; `args` excludes the program name. Returns the
/// process exit status: 0 on success, 2 on usage or parse errors, 3 on
/// internal errors.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocad::cli
