#pragma once

#include <stdexcept>
#include <string>

namespace polysel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed data: non-increasing abscissae, lo > hi, length mismatches,
// degrees out of range, grids too small for the requested degree.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A derived representation disagrees with the canonical one beyond the
// evaluation tolerance (ill-conditioned monomial conversion, or a witness
// search that cannot be certified).
class ConditioningError : public Error {
 public:
  using Error::Error;
};

// witness_for_tuple was called on a tuple whose intersection condition fails.
class InfeasibleTupleError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied bound violates a documented precondition (e.g. the
// stabilization epsilon lies below the measured deviation).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace polysel
