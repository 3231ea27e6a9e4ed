#pragma once

#include <stdexcept>
#include <string>

namespace ikg {

// Input outside an operation's contract (bad index, wrong dimension, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters sit on a genuine pole of a formula (coincident inhomogeneities,
// w(theta) = 0, evaluation at a zero of a Q-function, ...).
class SingularConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Iterative numerical routine failed (eigen-iteration, hint violated, ...).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ikg
