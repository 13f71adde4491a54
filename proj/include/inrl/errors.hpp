#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inrl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables of the wrong shape, out-of-range entries, duplicate names.
/// Distinct from an axiom failure, which is reported, not thrown.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class GluingError : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction that is guaranteed to succeed on valid input did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace inrl
