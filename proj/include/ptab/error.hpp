#pragma once

#include <stdexcept>
#include <string>

namespace ptab {

// A request exceeds a configured resource cap (enumeration size, recursion
// depth, moment order). Callers surface this as a user error.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ptab
