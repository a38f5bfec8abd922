#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twoclosure {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Element enumeration hit its cap; the instance is too large for
/// enumeration-based subroutines.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t partial, std::size_t cap)
      : Error("element enumeration exceeded cap of " + std::to_string(cap) +
              " (reached " + std::to_string(partial) + " elements)"),
        partial_(partial) {}

  std::size_t partial_count() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class NotBlockSystem : public Error {
 public:
  using Error::Error;
};

class NotAnOrbit : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class NotQuasiregular : public Error {
 public:
  using Error::Error;
};

class NotIntransitive : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// The automorphism search visited more nodes than allowed, or the degree is
/// above the oracle bound. Never an answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace twoclosure
