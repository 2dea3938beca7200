#ifndef SDMAP_CLI_HPP
#define SDMAP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sdmap {

// Runs one CLI invocation.  Exit codes: 0 = property holds / success,
// 1 = property fails, 2 = usage or IO error, 3 = budget exceeded.
// Diagnostics go to err only.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sdmap

#endif
