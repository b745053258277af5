#pragma once

#include <stdexcept>
#include <string>

namespace qbern {

/// Raised by field division (and series reciprocal) when the divisor is zero.
class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Raised when specializing a rational function at a genuine pole.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qbern
