#ifndef CORECHOR_ERROR_HPP
#define CORECHOR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace corechor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Call or RT_Call names a procedure outside the set the caller declared.
class UnknownProcedure : public Error {
 public:
  using Error::Error;
};

/// RT_Call with an empty pending list, or a similar term no rule can handle.
class MalformedTerm : public Error {
 public:
  using Error::Error;
};

class NoSuchTransition : public Error {
 public:
  using Error::Error;
};

/// Exhaustive exploration exceeded its node limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class SelfCommunication : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace corechor

#endif  // CORECHOR_ERROR_HPP
