#pragma once

#include <stdexcept>
#include <string>

namespace refclass {

// Raised for invalid input data or configuration. Carries a human-readable
// message that names the offending file, row or value where known.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace refclass
