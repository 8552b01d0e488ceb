#pragma once

#include <stdexcept>
#include <string>

namespace hilfer {

/// A point was requested that does not lie on the grid (or lies past its end).
class off_grid_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A gamma ratio or kernel is genuinely singular at the requested arguments.
class singular_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or transform could not be truncated within its budget.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A delta exponential met 1 + p(t) = 0.
class regressivity_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hilfer
