#pragma once

#include <string>
#include <vector>

namespace polyknot::cli {

// Entry point shared by the binary and the tests. Exit codes: 0 success /
// all checks pass, 1 usage or I/O error, 2 some verification check failed,
// 3 no failures but at least one inconclusive check.
int run(const std::vector<std::string>& args);

}  // namespace polyknot::cli
