#pragma once

#include <stdexcept>
#include <string>

namespace vtsp {

// Malformed input: bad indices, inconsistent tours, empty sequences.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact method refused an instance that exceeds its size guard.
class GuardRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search exhausted its bounded state space without reaching the goal.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vtsp
