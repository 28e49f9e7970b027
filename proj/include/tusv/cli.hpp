#pragma once

#include <string>
#include <vector>

namespace tusv::cli {

// Runs the tool with argv-style arguments (excluding the program name).
// Exit codes: 0 all checks passed, 1 mathematical mismatch or counterexample,
// 2 usage or I/O error.
int run(const std::vector<std::string>& args);

int main_entry(int argc, char** argv);

} // namespace tusv::cli
