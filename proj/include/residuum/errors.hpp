#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace residuum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes that do not fit together (non-square determinant, length mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Values outside an operation's domain (zero vector, empty set, overflow).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The generator set does not contain a pure power of every variable.
class NotCofiniteError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A weight sweep whose size exceeds the configured guard.
class ScaleRefusedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace residuum
