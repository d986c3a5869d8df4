#pragma once

// Infix polynomial expressions in y:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' INT)?
//   atom   := INT | 'y' | '(' expr ')'
//
// Multiplication is always explicit; exponents are literals in [0, 64].

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cubicdio/error.hpp"
#include "cubicdio/polyring.hpp"

namespace cubicdio {

class ParseError : public Error {
 public:
  ParseError(std::size_t column, std::vector<std::string> expected, const std::string& found);

  /// 1-based column of the offending character.
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

inline constexpr unsigned kMaxExponent = 64;

Poly parse_poly(std::string_view text);

/// Descending-degree rendering, e.g. "y^3 - 2*y + 1"; parse_poly inverts it.
std::string render_poly(const Poly& p);

}  // namespace cubicdio
