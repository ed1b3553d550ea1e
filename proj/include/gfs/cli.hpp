#pragma once

#include <string>
#include <vector>

namespace gfs {

// Entry point shared by the gfs binary and the test suites. args excludes
// argv[0]. Exit codes: 0 success, 1 usage/config error, 2 analysis failure
// (condition fails, no usable involution, guard exceeded for the requested
// analysis).
int run_cli(const std::vector<std::string>& args);

}  // namespace gfs
