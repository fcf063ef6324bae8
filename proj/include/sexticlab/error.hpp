#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sexticlab {

/// Raised when an argument lies outside an operation's domain
/// (negative isqrt input, zero polynomial in a resultant, non-prime modulus...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for inputs the library deliberately does not handle
/// (degree > 12 in factor_q, moduli that do not fit a machine word).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial expression syntax error; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sexticlab
