#pragma once

#include <stdexcept>
#include <string>

namespace ged {

/// Malformed or invalid input: graph/cost files, labels, bad arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure inside the optimizer or an eigensolver.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact oracle refuses instances above its node budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ged
