#pragma once

#include <string>
#include <vector>

namespace clusterdt::cli {

/// Parse and execute a command line.  argv[0] is the program name.
/// Returns the process exit code: 0 when every check passed, 1 when a
/// check failed or a computation broke down, 2 on usage errors.
int run(int argc, const char* const* argv);

/// Test-friendly overload: the arguments without the program name.
int run(const std::vector<std::string>& args);

} // namespace clusterdt::cli
