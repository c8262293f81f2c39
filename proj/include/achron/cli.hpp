#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace achron {

// Runs the command-line front end on already-split arguments (no program
// name).  Normal output goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success / condition holds, 1 a check or claim failed,
// 2 usage or input errors (reported on `err` as "E_CODE: message").
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace achron
