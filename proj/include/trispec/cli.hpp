#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trispec::cli {

// Runs one command line (without argv[0]); output goes to os, diagnostics to
// err.  Exit codes: 0 success / verification match, 1 verification mismatch,
// 2 usage, parse or range errors.
int run(const std::vector<std::string>& args, std::ostream& os, std::ostream& err);

} // namespace trispec::cli
