#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adjstat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series expansion requested for a rational function whose denominator
/// has no invertible constant term.
class NotExpandable : public Error {
 public:
  using Error::Error;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

/// Parameters fall outside the regime a closed form is valid for.
class WrongRegime : public Error {
 public:
  using Error::Error;
};

class SingularSpecialization : public Error {
 public:
  using Error::Error;
};

/// A Chebyshev value used as a denominator vanishes at the chosen point.
class DegeneratePoint : public Error {
 public:
  using Error::Error;
};

class InvalidComposition : public Error {
 public:
  using Error::Error;
};

class InvalidSequence : public Error {
 public:
  using Error::Error;
};

class InvalidWord : public Error {
 public:
  using Error::Error;
};

class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace adjstat
