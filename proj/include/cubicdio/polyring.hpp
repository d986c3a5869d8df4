#pragma once

// Dense univariate polynomials over Z, coefficients in ascending degree.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cubicdio {

using Integer = mpz_class;

/// Degree of a polynomial; the zero polynomial has degree "minus infinity",
/// represented by an empty Degree rather than a sentinel number.
class Degree {
 public:
  static Degree minus_infinity() { return Degree{}; }
  static Degree of(std::size_t d) { return Degree{d}; }

  bool is_minus_infinity() const noexcept { return !value_.has_value(); }
  std::size_t value() const { return value_.value(); }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend bool operator<(const Degree& a, const Degree& b) {
    if (a.is_minus_infinity()) return !b.is_minus_infinity();
    return !b.is_minus_infinity() && *a.value_ < *b.value_;
  }

 private:
  Degree() = default;
  explicit Degree(std::size_t d) : value_(d) {}
  std::optional<std::size_t> value_;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Integer& c);
  /// The monomial c * y^k.
  static Poly monomial(const Integer& c, std::size_t k);
  static Poly variable() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of y^k; zero beyond the degree.
  Integer coeff(std::size_t k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Integer leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
  friend Poly operator*(const Integer& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// Ring operation dispatch; `b` is ignored for Neg.
Poly arith(ArithOp op, const Poly& a, const Poly& b = Poly{});

/// Exact value p(n) by Horner's scheme.
Integer eval(const Poly& p, const Integer& n);

Poly derivative(const Poly& p);

/// Power p^k; p^0 = 1.
Poly pow(const Poly& p, unsigned k);

struct ContentPrimitive {
  Integer content;
  Poly primitive;
};

/// content >= 0 is the gcd of the coefficients; the primitive part keeps the
/// sign of p's leading coefficient.
ContentPrimitive content_primitive(const Poly& p);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
/// b must be nonzero.
Poly pseudo_remainder(const Poly& a, const Poly& b);

/// Quotient and remainder of a by b over Q[y], scaled to stay in Z[y]:
/// returns (scale, quotient, remainder) with scale * a = quotient * b + remainder
/// and deg remainder < deg b. b must be nonzero.
struct PseudoDivision {
  Integer scale;
  Poly quotient;
  Poly remainder;
};
PseudoDivision pseudo_divide(const Poly& a, const Poly& b);

/// True when b divides a over Q[y]. b must be nonzero.
bool divides_over_q(const Poly& b, const Poly& a);

/// Exact quotient a / b over Z[y]. Throws InconsistentInput when b does not
/// divide a over Z.
Poly exact_quotient(const Poly& a, const Poly& b);

/// gcd over Q[y], returned primitive with positive leading coefficient.
/// Primitive pseudo-remainder sequence; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
Poly squarefree_part(const Poly& p);

/// Number of distinct complex roots of multiplicity exactly one.
std::size_t count_simple_roots(const Poly& p);

}  // namespace cubicdio
