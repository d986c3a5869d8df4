#include "cubicdio/polyring.hpp"

#include <algorithm>
#include <string>

#include "cubicdio/error.hpp"

namespace cubicdio {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InconsistentInput: return "InconsistentInput";
    case ErrorKind::CasusIrreducibilis: return "CasusIrreducibilis";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::InvalidBound: return "InvalidBound";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }

Poly Poly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Degree Poly::degree() const noexcept {
  return is_zero() ? Degree::minus_infinity() : Degree::of(coeffs_.size() - 1);
}

Integer Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer Poly::leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Poly arith(ArithOp op, const Poly& a, const Poly& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
  }
  return Poly{};
}

Integer eval(const Poly& p, const Integer& n) {
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= n;
    acc += *it;
  }
  return acc;
}

Poly derivative(const Poly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Poly{};
  std::vector<Integer> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Poly(std::move(out));
}

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

ContentPrimitive content_primitive(const Poly& p) {
  if (p.is_zero()) return {Integer(0), Poly{}};
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  std::vector<Integer> out = p.coeffs();
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return {g, Poly(std::move(out))};
}

PseudoDivision pseudo_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "pseudo-division by the zero polynomial");
  const std::size_t db = b.degree().value();
  const Integer lc = b.leading();
  if (a.is_zero() || a.degree().value() < db) return {Integer(1), Poly{}, a};

  const std::size_t da = a.degree().value();
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quo(da - db + 1);
  Integer scale = 1;
  // Each step multiplies everything by lc so the leading term cancels exactly.
  for (std::size_t k = da + 1; k-- > db;) {
    for (auto& q : quo) q *= lc;
    for (std::size_t i = 0; i <= k; ++i) rem[i] *= lc;
    scale *= lc;
    if (sgn(rem[k]) == 0) continue;
    Integer t;
    mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), lc.get_mpz_t());
    quo[k - db] += t;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= t * b.coeffs()[j];
  }
  rem.resize(db);
  return {scale, Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly pseudo_remainder(const Poly& a, const Poly& b) { return pseudo_divide(a, b).remainder; }

bool divides_over_q(const Poly& b, const Poly& a) { return pseudo_remainder(a, b).is_zero(); }

Poly exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return Poly{};
  if (a.degree() < b.degree()) throw Error(ErrorKind::InconsistentInput, "inexact polynomial division");
  const std::size_t db = b.degree().value();
  const std::size_t da = a.degree().value();
  const Integer& lc = b.coeffs().back();
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quo(da - db + 1);
  for (std::size_t k = da + 1; k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lc.get_mpz_t())) {
      throw Error(ErrorKind::InconsistentInput, "inexact polynomial division");
    }
    Integer t;
    mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), lc.get_mpz_t());
    quo[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= t * b.coeffs()[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(rem[i]) != 0) throw Error(ErrorKind::InconsistentInput, "inexact polynomial division");
  }
  return Poly(std::move(quo));
}

namespace {

Poly normalized_primitive(const Poly& p) {
  Poly prim = content_primitive(p).primitive;
  if (sgn(prim.leading()) < 0) prim = -prim;
  return prim;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalized_primitive(b);
  if (b.is_zero()) return normalized_primitive(a);
  Poly u = normalized_primitive(a);
  Poly v = normalized_primitive(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Poly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = normalized_primitive(r);
  }
  return u;
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of the zero polynomial");
  const Poly g = gcd(p, derivative(p));
  // g is primitive, so by Gauss's lemma it divides the primitive part of p over Z.
  return normalized_primitive(exact_quotient(normalized_primitive(p), g));
}

std::size_t count_simple_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "simple roots of the zero polynomial");
  const Poly g = gcd(p, derivative(p));
  const Poly s = normalized_primitive(exact_quotient(normalized_primitive(p), g));
  const Poly shared = gcd(s, g);
  return s.degree().value() - shared.degree().value();
}

}  // namespace cubicdio
