#ifndef RESERVE_ERRORS_HPP
#define RESERVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reserve {

/// A parameter or input violates its documented bounds.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix lacks the structure an operation requires (e.g. state 0 is not
/// absorbing, or the transient block is degenerate).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Stationary analysis requested for a chain with an absorbing empty state.
class IrreducibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Objective kind and model variant do not go together.
class IncompatibleObjective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reserve

#endif  // RESERVE_ERRORS_HPP
