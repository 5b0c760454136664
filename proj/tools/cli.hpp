#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace refclass::cli {

// Entry point shared by the executable and the tests. args excludes the
// program name. Returns the process exit status:
//   0 success, 1 oracle mismatch, 2 invalid input or configuration,
//   3 corpus too large for the oracle.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace refclass::cli
