#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace factorkit {

// Command-line entry point, separated from main() so tests can drive it
// in-process.  args excludes the program name.  JSON goes to out, diagnostics
// to err.  Exit codes: 0 holds / witness exists / all trials agree, 1 the
// property fails, 2 usage or input error, 3 enumeration cap exceeded,
// 4 internal soundness abort.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace factorkit
