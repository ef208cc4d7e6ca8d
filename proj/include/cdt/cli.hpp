#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace cdt {
namespace cli {

// Command dispatch behind the `cdt` binary. Returns the process exit code:
// 0 success, 1 malformed input, 2 infeasible task, 3 internal invariant
// violation.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace cli
}  // namespace cdt
