#include "cubicdio/polyexpr.hpp"

#include <cctype>
#include <optional>

namespace cubicdio {

namespace {

std::string describe(const std::vector<std::string>& expected, const std::string& found) {
  std::string msg = "expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  return msg + ", found " + found;
}

}  // namespace

ParseError::ParseError(std::size_t column, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::ParseError, "column " + std::to_string(column) + ": " + describe(expected, found)),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Int, Var, Plus, Minus, Star, Caret, LParen, RParen, End, Invalid };

struct Token {
  Tok kind;
  std::size_t pos;  // 0-based offset
  std::string_view text;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Poly parse() {
    Poly p = expr();
    if (cur_.kind != Tok::End) fail({"'+'", "'-'", "'*'", "end of input"});
    return p;
  }

 private:
  void advance() {
    std::size_t i = next_;
    while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
    if (i == src_.size()) {
      cur_ = {Tok::End, i, {}};
      next_ = i;
      return;
    }
    const char c = src_[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      cur_ = {Tok::Int, i, src_.substr(i, j - i)};
      next_ = j;
      return;
    }
    Tok kind;
    switch (c) {
      case 'y': kind = Tok::Var; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        kind = Tok::Invalid;
        break;
    }
    cur_ = {kind, i, src_.substr(i, 1)};
    next_ = i + 1;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = cur_.kind == Tok::End ? "end of input" : "'" + std::string(cur_.text) + "'";
    throw ParseError(cur_.pos + 1, std::move(expected), found);
  }

  bool at(Tok k) const { return cur_.kind == k; }

  Poly expr() {
    Poly acc = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const bool minus = at(Tok::Minus);
      advance();
      Poly rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    while (at(Tok::Star)) {
      advance();
      acc *= unary();
    }
    return acc;
  }

  Poly unary() {
    if (at(Tok::Minus)) {
      advance();
      return -unary();
    }
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!at(Tok::Caret)) return base;
    advance();
    if (!at(Tok::Int)) fail({"non-negative integer exponent"});
    const std::string digits(cur_.text);
    const std::size_t col = cur_.pos + 1;
    const std::size_t first = digits.find_first_not_of('0');
    const std::string trimmed = first == std::string::npos ? "0" : digits.substr(first);
    if (trimmed.size() > 2 || std::stoul(trimmed) > kMaxExponent) {
      throw ParseError(col, {"exponent <= " + std::to_string(kMaxExponent)}, "'" + digits + "'");
    }
    advance();
    return pow(base, static_cast<unsigned>(std::stoul(trimmed)));
  }

  Poly atom() {
    if (at(Tok::Int)) {
      Poly p = Poly::constant(Integer(std::string(cur_.text)));
      advance();
      return p;
    }
    if (at(Tok::Var)) {
      advance();
      return Poly::variable();
    }
    if (at(Tok::LParen)) {
      advance();
      Poly inner = expr();
      if (!at(Tok::RParen)) fail({"'+'", "'-'", "'*'", "')'"});
      advance();
      return inner;
    }
    fail({"integer", "'y'", "'('", "'-'"});
  }

  std::string_view src_;
  std::size_t next_ = 0;
  Token cur_{Tok::End, 0, {}};
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    const bool negative = sgn(c[k]) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Integer mag = abs(c[k]);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "y";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace cubicdio
