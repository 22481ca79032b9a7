#pragma once

#include <stdexcept>
#include <string>

namespace enchilada {

/// Raised for malformed inputs: bad block sizes, out-of-range ideal members,
/// INF where a finite entry is required, and similar contract violations.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two morphisms were combined whose endpoints do not line up.
class EndpointMismatch : public ValidationError {
public:
  explicit EndpointMismatch(const std::string& what) : ValidationError(what) {}
};

/// A numeric realization failed its own axioms or produced a non-integral
/// multiplicity.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace enchilada
