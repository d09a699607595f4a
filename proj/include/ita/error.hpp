#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ita {

enum class ErrorKind {
  Syntax,
  ArityClash,
  InvalidArgument,
  EmptyMBox,
  NotSaturated,
  TooLarge,
  NoRepairStep,
  UnknownName,
};

/// Base exception for every recoverable failure in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// 1-based position into parsed text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan where,
             ErrorKind kind = ErrorKind::Syntax)
      : Error(kind, format(message, where)), where_(where), detail_(message) {}

  const SourceSpan& where() const noexcept { return where_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(const std::string& message, SourceSpan where) {
    return std::to_string(where.line) + ":" + std::to_string(where.column) +
           ": " + message;
  }

  SourceSpan where_;
  std::string detail_;
};

/// Raised when a chase bound prevents a decision that must be exact
/// (closure, repair enumeration).
class NotSaturatedError : public Error {
 public:
  explicit NotSaturatedError(const std::string& what)
      : Error(ErrorKind::NotSaturated, what) {}
};

}  // namespace ita
