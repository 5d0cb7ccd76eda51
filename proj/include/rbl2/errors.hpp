#pragma once

#include <stdexcept>
#include <string>

namespace rbl2 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tensor or map dimensions do not fit together.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A construction produced a structure that fails its own verifier.
class InternalInvariantBroken : public Error {
 public:
  using Error::Error;
};

class NotComposable : public Error {
 public:
  using Error::Error;
};

class NotStrict : public Error {
 public:
  using Error::Error;
};

class NotChainMap : public Error {
 public:
  using Error::Error;
};

class SourceTargetMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, unsigned long long candidates)
      : Error(std::move(what)), candidates_(candidates) {}
  unsigned long long candidates() const noexcept { return candidates_; }

 private:
  unsigned long long candidates_;
};

class BadSite : public Error {
 public:
  using Error::Error;
};

// Serialization errors.

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DuplicateEntry : public Error {
 public:
  using Error::Error;
};

class BadRational : public Error {
 public:
  using Error::Error;
};

class UnknownKind : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace rbl2
