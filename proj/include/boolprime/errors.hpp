#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolprime {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different variable counts.
class VariableMismatch : public Error {
 public:
  VariableMismatch(std::size_t lhs, std::size_t rhs)
      : Error("variable count mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// degree() of the zero polynomial.
class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("the zero polynomial has no degree") {}
};

/// Malformed polynomial or subset text; `position` is a 0-based column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace boolprime
