#ifndef BARVIS_ERRORS_HPP
#define BARVIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace barvis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input object violates its own structural invariants
/// (overlapping bars, malformed rotation system, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A pipeline stage was handed an input outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Something that the construction guarantees did not hold. Seeing one of
/// these means a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Geometry was not in general position (collinear overlapping segments).
class DegenerateGeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace barvis

#endif  // BARVIS_ERRORS_HPP
