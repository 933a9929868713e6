#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit (non-square matrix, vector length mismatch, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Two subspaces live in different ambient spaces.
class AmbientMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  kSyntax,
  kUnknownSymbol,
  kIndexOutOfRange,
  kUnboundParameter,
  kDuplicateProduct,
  kDivisionByZero,
};

const char* to_string(ParseErrorKind kind);

/// Malformed algebra definition. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// A family parameter was bound to one of its excluded values, or an
/// override names a parameter the definition does not declare.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A corpus file is missing or corrupt. The message names the entry.
class CorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace algkit
