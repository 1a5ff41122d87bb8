#pragma once

#include <string>
#include <vector>

namespace causaldisc::cli {

/// Entry point behind the causaldisc binary. Exit codes: 0 success, 1 usage,
/// 2 validation/io failure, 3 inconsistent oracle input.
int cli_main(const std::vector<std::string>& args);

int cli_main(int argc, const char* const* argv);

}  // namespace causaldisc::cli
