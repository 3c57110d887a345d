#pragma once

#include <stdexcept>
#include <string>

namespace spillover {

/// Raised for defects in user-supplied inputs (files, CSV contents,
/// configuration). The CLI maps this to exit code 2; everything else
/// is treated as an internal error (exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spillover
