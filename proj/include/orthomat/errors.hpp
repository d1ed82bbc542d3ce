#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orthomat {

// Base of every error the library throws. The CLI maps the concrete type
// onto an exit code (input errors -> 2, resource limits -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value violates the invariant of the type it is being wrapped into
// (e.g. a non-skew matrix handed to SkewSymmetricMatrix).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class FlavorError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IsotropyError : public Error {
 public:
  IsotropyError(const std::string& what, std::size_t row, std::size_t col)
      : Error(what), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class PivotError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Enumeration or exhaustive check would exceed a configured size limit.
// `flag` names the CLI option that raises the limit.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::string flag)
      : Error(what), flag_(std::move(flag)) {}
  const std::string& flag() const { return flag_; }

 private:
  std::string flag_;
};

// Two independent routes disagreed. Reaching this is a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace orthomat
