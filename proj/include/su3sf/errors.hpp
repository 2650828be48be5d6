#pragma once

#include <stdexcept>
#include <string>

namespace su3sf {

/// A parameter tuple or range violates a stated admissibility constraint.
class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The leading matrix of a recursion step is singular at some component.
class SingularStep : public std::runtime_error {
 public:
  SingularStep(const std::string& what, long component)
      : std::runtime_error(what), component_(component) {}
  long component() const { return component_; }

 private:
  long component_;
};

/// Back-substitution for an L(lambda) eigenvector failed at a degenerate lambda.
class SpectralDegeneracy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The joint recursion system did not have a one-dimensional solution space.
class NullspaceDimension : public std::runtime_error {
 public:
  NullspaceDimension(const std::string& what, std::size_t dimension)
      : std::runtime_error(what), dimension_(dimension) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

/// A series is too short for the requested operation.
class InsufficientTruncation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check failed; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace su3sf
