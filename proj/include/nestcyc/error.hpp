#pragma once

#include <stdexcept>
#include <string>

namespace nestcyc {

/// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal contract was violated; a construction produced something its
/// own checks reject (CLI exit code 3).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nestcyc
