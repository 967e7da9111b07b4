#pragma once

#include <stdexcept>
#include <string>

namespace flc {

/// Input violates a documented precondition or structural invariant.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An instance exceeds a configured size bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed-form formula was evaluated outside the indices it is stated for.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A recurrence was requested below the index from which it holds.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace flc
