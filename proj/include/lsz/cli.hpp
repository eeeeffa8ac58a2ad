#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsz {

// Entry point shared by the binary and the tests. Returns the process exit
// code: 0 success, 1 failed check/disagreement, 2 parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsz
