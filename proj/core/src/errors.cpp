#include "algkit/errors.hpp"

namespace algkit {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kSyntax: return "syntax error";
    case ParseErrorKind::kUnknownSymbol: return "unknown basis symbol";
    case ParseErrorKind::kIndexOutOfRange: return "index out of range";
    case ParseErrorKind::kUnboundParameter: return "unbound parameter";
    case ParseErrorKind::kDuplicateProduct: return "duplicate product definition";
    case ParseErrorKind::kDivisionByZero: return "division by zero";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& detail)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + to_string(kind) +
            (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(detail) {}

}  // namespace algkit
