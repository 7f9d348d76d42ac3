#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netconn {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input parsed cleanly but holds no segments.
class EmptyNetworkError : public Error {
 public:
  EmptyNetworkError() : Error("network has no segments") {}
};

/// An index fell outside the domain of an IndexMapping.
class MappingError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition was not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; signals a bug upstream.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A generator or sweep configuration cannot be realized.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// Too few data points for a fit.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// The quadratic reference check refused an instance above its size bound.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace netconn
