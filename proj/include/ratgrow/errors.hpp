#ifndef RATGROW_ERRORS_HPP
#define RATGROW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ratgrow {

/// Base class for all ratgrow exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument lies outside the mathematical domain of the operation
/// (eta outside [0,1], a root modulus below k, a pole inside the disk, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point coincides with a pole within tolerance.
class PoleHit : public Error {
 public:
  using Error::Error;
};

/// A pole modulus is <= 1; pole products and Blaschke factors are undefined.
class PoleOnCircle : public Error {
 public:
  using Error::Error;
};

/// The nominal leading coefficient is below the degeneracy tolerance while
/// the caller demanded an exact degree.
class DegenerateLeading : public Error {
 public:
  using Error::Error;
};

/// Every grid point of a circle search was vacuous or pole-hit.
class AllSkipped : public Error {
 public:
  using Error::Error;
};

/// An instance or configuration file could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ratgrow

#endif  // RATGROW_ERRORS_HPP
