#pragma once

#include <stdexcept>
#include <string>

namespace qpart {

/// Malformed textual input (polynomial grammar, JSON, integer literals).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on the mathematical input does not hold: nonpositive
/// modulus, non-coprime inverse request, all-zero gcd, evaluation below the
/// lower boundary, period cap exceeded.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An identity that must hold by construction failed (an exact division left
/// a remainder, a count came out negative). Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qpart
