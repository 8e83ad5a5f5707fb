#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vgb::cli {

enum ExitCode : int {
    Ok = 0,
    Failed = 1,
    ParseFailure = 2,
    BudgetFailure = 3,
    PreconditionFailure = 4,
    NotAConfigurationFailure = 5,
    PartialResult = 6,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vgb::cli
