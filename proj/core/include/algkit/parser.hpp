#pragma once

#include "algkit/algebra.hpp"
#include "algkit/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace algkit {

struct ParseOptions {
  /// Label stored on the result.
  std::string name;
  /// Replace the declared default of a parameter. Naming an undeclared
  /// parameter is a ParameterError.
  std::map<std::string, Rational, std::less<>> overrides;
};

/// Parses the algebra definition format:
///
///   # comment
///   dim 4
///   param alpha = 2 exclude 1
///   e1*e2 = e4
///   e2*e1 = ((1+alpha)/(1-alpha)) e4
///   e2*e2 = -2 e3 + e4
///
/// Statements end at a newline or ';'. Coefficients are rational literals
/// (3, -1/2) or parenthesized expressions over declared parameters using
/// + - * /. Products that are not listed are zero.
///
/// Throws ParseError for malformed text and ParameterError when a parameter
/// ends up bound to one of its excluded values.
StructureConstants parse_algebra(std::string_view text, const ParseOptions& options = {});

/// Text in the same format that parses back to an identical tensor. Parameter
/// declarations are kept (with their bound values) so bindings survive.
std::string to_definition_text(const StructureConstants& sc);

}  // namespace algkit
