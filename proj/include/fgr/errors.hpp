#pragma once

#include <stdexcept>
#include <string>

namespace fgr {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance violates one of its type invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Checked arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration exceeded its work cap.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace fgr
