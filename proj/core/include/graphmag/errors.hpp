#pragma once

#include <stdexcept>
#include <string>

namespace graphmag {

/// Malformed caller input: out-of-range vertices, self-loops, bad sizes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem's hypothesis does not hold for the given input
/// (non-transitive graph, non-convex target, non-adjacent gluing points).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational function or matrix could not be inverted where required.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The denominator's constant term is not a unit of Z, so there is no
/// integer power series expansion.
class NotIntegerInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation at a root of the denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularMatrixError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Broken internal invariant, e.g. a Bareiss division with nonzero remainder.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace graphmag
