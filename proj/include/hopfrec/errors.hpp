#pragma once

#include <stdexcept>
#include <string>

namespace hopfrec {

// Base of every error raised by the library. Axiom failures are reported
// through Report values, not exceptions; exceptions signal malformed input
// or violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NonInvertibleJ : public Error {
 public:
  using Error::Error;
};

class NonRigid : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class NotSplitOrNotSemisimple : public Error {
 public:
  using Error::Error;
};

class Incomplete : public Error {
 public:
  using Error::Error;
};

class DecompositionGap : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& field, const std::string& what)
      : Error("schema error at '" + field + "': " + what), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace hopfrec
