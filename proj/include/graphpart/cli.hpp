#pragma once

#include <string>
#include <vector>

namespace graphpart {

// Entry point behind the graphpart binary; args exclude the program name.
// Exit status: 0 = YES / certificate valid, 1 = NO / certificate invalid,
// 2 = usage, parse, or configuration errors.
int run_cli(std::vector<std::string> args);

} // namespace graphpart
