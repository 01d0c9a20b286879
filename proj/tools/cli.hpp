#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stirsym::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 failed identity or mismatch, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// SP^(r)_n for n = 0..max_n in all five bases, one "basis: expansion"
/// line each. This is the text that the golden files hold.
std::string golden_table(int r, int max_n = 6);

}  // namespace stirsym::cli
