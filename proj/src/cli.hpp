#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewalg::cli {

/// Exit codes.
enum : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_domain = 3,
    exit_guard = 4,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewalg::cli
