#include "algkit/parser.hpp"

#include "algkit/errors.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace algkit {

namespace {

enum class Tok { kIdent, kNumber, kSymbol, kEnd, kEof };

struct Token {
  Tok kind = Tok::kEof;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Splits the input into tokens. Newlines and ';' both become kEnd.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count = 1) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
    } else if (c == '\n' || c == ';') {
      out.push_back({Tok::kEnd, std::string(1, c), line, col});
      advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::kNumber, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("*=+-/(),").find(c) != std::string_view::npos) {
      out.push_back({Tok::kSymbol, std::string(1, c), line, col});
      advance();
    } else {
      throw ParseError(ParseErrorKind::kSyntax, line, col,
                       std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEof, "", line, col});
  return out;
}

/// e<digits> -> 1-based index; nullopt for any other identifier.
std::optional<unsigned long> basis_index(const std::string& ident) {
  if (ident.size() < 2 || ident[0] != 'e') return std::nullopt;
  for (std::size_t k = 1; k < ident.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(ident[k]))) return std::nullopt;
  if (ident.size() > 12) return std::numeric_limits<unsigned long>::max();
  return std::stoul(ident.substr(1));
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : tokens_(tokenize(text)), options_(options) {}

  StructureConstants run() {
    while (peek().kind != Tok::kEof) {
      if (peek().kind == Tok::kEnd) {
        next();
        continue;
      }
      statement();
      if (peek().kind != Tok::kEof) expect_end();
    }
    if (!dim_) throw error(ParseErrorKind::kSyntax, peek(), "missing 'dim' statement");

    for (const auto& [name, value] : options_.overrides) {
      if (!declared_.contains(name))
        throw ParameterError("parameter '" + name + "' is not declared by this algebra");
    }

    StructureConstants sc(*dim_, options_.name, bindings_);
    for (const auto& p : products_) sc.gamma(p.i, p.j, p.k) += p.coeff;
    return sc;
  }

 private:
  struct ProductTerm {
    std::size_t i, j, k;
    Rational coeff;
  };

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  ParseError error(ParseErrorKind kind, const Token& at, const std::string& detail) const {
    return ParseError(kind, at.line, at.column, detail);
  }

  bool accept_symbol(char c) {
    if (peek().kind == Tok::kSymbol && peek().text[0] == c) {
      next();
      return true;
    }
    return false;
  }

  void expect_symbol(char c) {
    if (!accept_symbol(c))
      throw error(ParseErrorKind::kSyntax, peek(),
                  std::string("expected '") + c + "', found '" + describe(peek()) + "'");
  }

  void expect_end() {
    if (peek().kind != Tok::kEnd)
      throw error(ParseErrorKind::kSyntax, peek(),
                  "expected end of statement, found '" + describe(peek()) + "'");
    next();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::kEof) return "end of input";
    if (t.kind == Tok::kEnd) return t.text == ";" ? ";" : "end of line";
    return t.text;
  }

  void statement() {
    const Token& head = peek();
    if (head.kind == Tok::kIdent && head.text == "dim") {
      dim_statement();
    } else if (head.kind == Tok::kIdent && head.text == "param") {
      param_statement();
    } else if (head.kind == Tok::kIdent) {
      product_statement();
    } else {
      throw error(ParseErrorKind::kSyntax, head, "unexpected '" + describe(head) + "'");
    }
  }

  void dim_statement() {
    const Token& kw = next();
    if (dim_) throw error(ParseErrorKind::kSyntax, kw, "'dim' declared twice");
    const Token& value = next();
    if (value.kind != Tok::kNumber)
      throw error(ParseErrorKind::kSyntax, value, "expected dimension after 'dim'");
    if (value.text.size() > 4 || std::stoul(value.text) == 0)
      throw error(ParseErrorKind::kSyntax, value, "dimension must be between 1 and 9999");
    dim_ = std::stoul(value.text);
  }

  Rational signed_rational_literal() {
    const bool negative = accept_symbol('-');
    if (!negative) accept_symbol('+');
    Rational r = rational_literal();
    return negative ? Rational(-r) : r;
  }

  Rational rational_literal() {
    const Token& num = next();
    if (num.kind != Tok::kNumber)
      throw error(ParseErrorKind::kSyntax, num, "expected a number, found '" + describe(num) + "'");
    Rational r(mpz_class(num.text, 10));
    if (accept_symbol('/')) {
      const Token& den = next();
      if (den.kind != Tok::kNumber)
        throw error(ParseErrorKind::kSyntax, den, "expected denominator after '/'");
      mpz_class d(den.text, 10);
      if (d == 0) throw error(ParseErrorKind::kDivisionByZero, den, "zero denominator");
      r /= Rational(d);
    }
    return r;
  }

  void param_statement() {
    next();  // 'param'
    const Token& name = next();
    if (name.kind != Tok::kIdent || basis_index(name.text) || is_keyword(name.text))
      throw error(ParseErrorKind::kSyntax, name, "expected parameter name");
    if (declared_.contains(name.text))
      throw error(ParseErrorKind::kSyntax, name, "parameter '" + name.text + "' declared twice");
    expect_symbol('=');
    ParameterBinding binding{name.text, signed_rational_literal(), {}};
    if (peek().kind == Tok::kIdent && peek().text == "exclude") {
      next();
      binding.excluded.push_back(signed_rational_literal());
      while (accept_symbol(',')) binding.excluded.push_back(signed_rational_literal());
    }
    if (auto it = options_.overrides.find(binding.name); it != options_.overrides.end())
      binding.value = it->second;
    for (const Rational& x : binding.excluded)
      if (x == binding.value)
        throw ParameterError("excluded parameter value " + binding.name + "=" +
                             to_short_string(binding.value));
    declared_.emplace(binding.name, binding.value);
    bindings_.push_back(std::move(binding));
  }

  static bool is_keyword(const std::string& s) {
    return s == "dim" || s == "param" || s == "exclude";
  }

  std::size_t basis_symbol() {
    const Token& t = next();
    if (t.kind != Tok::kIdent)
      throw error(ParseErrorKind::kSyntax, t, "expected basis symbol, found '" + describe(t) + "'");
    const auto idx = basis_index(t.text);
    if (!idx) throw error(ParseErrorKind::kUnknownSymbol, t, "'" + t.text + "'");
    if (!dim_) throw error(ParseErrorKind::kSyntax, t, "'dim' must precede products");
    if (*idx < 1 || *idx > *dim_)
      throw error(ParseErrorKind::kIndexOutOfRange, t,
                  "'" + t.text + "' in an algebra of dimension " + std::to_string(*dim_));
    return *idx - 1;
  }

  void product_statement() {
    const Token& start = peek();
    const std::size_t i = basis_symbol();
    expect_symbol('*');
    const std::size_t j = basis_symbol();
    if (!defined_.insert({i, j}).second)
      throw error(ParseErrorKind::kDuplicateProduct, start,
                  "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1));
    expect_symbol('=');

    if (peek().kind == Tok::kNumber && peek().text == "0" &&
        (tokens_[pos_ + 1].kind == Tok::kEnd || tokens_[pos_ + 1].kind == Tok::kEof)) {
      next();
      return;
    }

    bool negative = accept_symbol('-');
    if (!negative) accept_symbol('+');
    while (true) {
      Rational coeff = term_coefficient();
      const std::size_t k = basis_symbol();
      if (negative) coeff = -coeff;
      products_.push_back({i, j, k, coeff});
      if (accept_symbol('+')) {
        negative = false;
      } else if (accept_symbol('-')) {
        negative = true;
      } else {
        break;
      }
    }
  }

  Rational term_coefficient() {
    Rational coeff = 1;
    if (peek().kind == Tok::kNumber) {
      coeff = rational_literal();
    } else if (peek().kind == Tok::kSymbol && peek().text == "(") {
      next();
      coeff = expression();
      expect_symbol(')');
    }
    accept_symbol('*');
    return coeff;
  }

  // expression := product (('+'|'-') product)*
  Rational expression() {
    Rational value = product();
    while (true) {
      if (accept_symbol('+')) {
        value += product();
      } else if (accept_symbol('-')) {
        value -= product();
      } else {
        return value;
      }
    }
  }

  // product := unary (('*'|'/') unary)*
  Rational product() {
    Rational value = unary();
    while (true) {
      if (accept_symbol('*')) {
        value *= unary();
      } else if (peek().kind == Tok::kSymbol && peek().text == "/") {
        const Token& slash = next();
        const Rational divisor = unary();
        if (divisor == 0) throw error(ParseErrorKind::kDivisionByZero, slash, "in coefficient");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Rational unary() {
    if (accept_symbol('-')) return -unary();
    if (accept_symbol('+')) return unary();
    return primary();
  }

  Rational primary() {
    const Token& t = peek();
    if (t.kind == Tok::kNumber) {
      next();
      return Rational(mpz_class(t.text, 10));
    }
    if (t.kind == Tok::kIdent) {
      next();
      if (auto it = declared_.find(t.text); it != declared_.end()) return it->second;
      throw error(ParseErrorKind::kUnboundParameter, t, "'" + t.text + "'");
    }
    if (accept_symbol('(')) {
      Rational value = expression();
      expect_symbol(')');
      return value;
    }
    throw error(ParseErrorKind::kSyntax, t, "unexpected '" + describe(t) + "' in expression");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;

  std::optional<std::size_t> dim_;
  std::map<std::string, Rational, std::less<>> declared_;
  std::vector<ParameterBinding> bindings_;
  std::set<std::pair<std::size_t, std::size_t>> defined_;
  std::vector<ProductTerm> products_;
};

}  // namespace

StructureConstants parse_algebra(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

std::string to_definition_text(const StructureConstants& sc) {
  std::ostringstream out;
  const std::size_t n = sc.dim();
  out << "dim " << n << "\n";
  for (const auto& p : sc.parameters()) {
    out << "param " << p.name << " = " << to_short_string(p.value);
    for (std::size_t k = 0; k < p.excluded.size(); ++k)
      out << (k == 0 ? " exclude " : ", ") << to_short_string(p.excluded[k]);
    out << "\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = sc.gamma(i, j, k);
        if (c == 0) continue;
        const Rational magnitude = abs(c);
        if (rhs.empty()) {
          if (c < 0) rhs += "-";
        } else {
          rhs += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1) rhs += to_short_string(magnitude) + " ";
        rhs += "e" + std::to_string(k + 1);
      }
      if (!rhs.empty())
        out << "e" << i + 1 << "*e" << j + 1 << " = " << rhs << "\n";
    }
  return out.str();
}

}  // namespace algkit
