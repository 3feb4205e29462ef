#pragma once

#include <stdexcept>

namespace hankel {

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a request is well-formed but exceeds a configured resource
/// guard (Laplace order limit, path enumeration cap).
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hankel
