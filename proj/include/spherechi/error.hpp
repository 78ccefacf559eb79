#pragma once

#include <stdexcept>
#include <string>

namespace spherechi {

/// Raised when an operation's inputs fall outside its domain or a
/// construction cannot produce a meaningful bound.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spherechi
