#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lapmatch {

// Runs the command line given args without the program name. Reports go to
// out, diagnostics to err. Returns the process exit code: 0 clean, 2 when a
// counterexample was found, 1 on operational errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Exit code shared by verify and hunt: operational errors dominate, then
// counterexamples, then success.
int exit_code_for(long long counterexample_total, bool had_errors);

} // namespace lapmatch
