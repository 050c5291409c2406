#pragma once

#include <stdexcept>
#include <string>

namespace lineacm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries a 1-based line/column when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

/// Input is well formed but violates an operation's domain (zero polynomial
/// where a degree is needed, exponent < 1, dependent forms, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Well-formed configuration text whose content is invalid (a B form using s,
/// dependent forms in a vertical line, ...). Carries the 1-based source line.
class SemanticError : public DomainError {
 public:
  SemanticError(const std::string& what, int line)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Caller broke a structural contract (mixed orders, wrong ambient ring,
/// elimination under a non-elimination order, substitution cycle).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A randomly drawn "general" object failed its genericity test on every retry.
class NonGenericError : public Error {
 public:
  using Error::Error;
};

/// A criterion was asked about a configuration outside its hypotheses.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure hit its configured cap before concluding.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same answer disagree.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lineacm
