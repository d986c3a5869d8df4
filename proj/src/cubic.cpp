#include "cubicdio/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cubicdio/error.hpp"

namespace cubicdio {

Poly discriminant_poly(const Poly& p, const Poly& q) {
  return Integer(-4) * (p * p * p) - Integer(27) * (q * q);
}

CubicFamily::CubicFamily(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)), disc_(discriminant_poly(p_, q_)) {}

const char* to_string(Mod3Class::Kind kind) noexcept {
  switch (kind) {
    case Mod3Class::Kind::IdenticallyZero: return "IdenticallyZero";
    case Mod3Class::Kind::NowhereZero: return "NowhereZero";
    case Mod3Class::Kind::SometimesZero: return "SometimesZero";
  }
  return "Unknown";
}

Mod3Class mod3_classify(const Poly& p) {
  std::vector<unsigned long> reduced;
  reduced.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) reduced.push_back(mpz_fdiv_ui(c.get_mpz_t(), 3));
  if (std::all_of(reduced.begin(), reduced.end(), [](unsigned long c) { return c == 0; })) {
    return {Mod3Class::Kind::IdenticallyZero, {}};
  }
  std::vector<unsigned> vanishing;
  for (unsigned r = 0; r < 3; ++r) {
    unsigned long acc = 0;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) acc = (acc * r + *it) % 3;
    if (acc == 0) vanishing.push_back(r);
  }
  if (vanishing.empty()) return {Mod3Class::Kind::NowhereZero, {}};
  return {Mod3Class::Kind::SometimesZero, std::move(vanishing)};
}

SpecializedCubic SpecializedCubic::from_coefficients(const Integer& p0, const Integer& q0) {
  return {Integer(0), p0, q0, Integer(-4 * p0 * p0 * p0 - 27 * q0 * q0)};
}

SpecializedCubic specialize(const CubicFamily& fam, const Integer& y0) {
  SpecializedCubic s{y0, eval(fam.p(), y0), eval(fam.q(), y0), Integer(0)};
  s.d0 = -4 * s.p0 * s.p0 * s.p0 - 27 * s.q0 * s.q0;
  return s;
}

std::optional<Integer> w_filter(const SpecializedCubic& spec) { return perfect_square(Integer(-3 * spec.d0)); }

std::vector<Integer> integer_roots(const SpecializedCubic& spec, const DivisorBudget& budget) {
  std::vector<Integer> roots;
  if (sgn(spec.q0) == 0) {
    roots.emplace_back(0);
    if (auto s = perfect_square(Integer(-spec.p0)); s && sgn(*s) != 0) {
      roots.push_back(-*s);
      roots.push_back(*s);
    }
  } else {
    for (const auto& d : divisors(spec.q0, budget)) {
      if (sgn(spec.value_at(d)) == 0) roots.push_back(d);
      const Integer neg = -d;
      if (sgn(spec.value_at(neg)) == 0) roots.push_back(neg);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

const char* to_string(RootClass c) noexcept {
  switch (c) {
    case RootClass::RepeatedRoots: return "RepeatedRoots";
    case RootClass::Reducible: return "Reducible";
    case RootClass::IrreducibleMetacyclic: return "IrreducibleMetacyclic";
    case RootClass::IrreducibleCyclicQ: return "IrreducibleCyclicQ";
  }
  return "Unknown";
}

namespace {

// Integer roots of the quadratic cofactor left after removing the root x0.
std::vector<Integer> cofactor_integer_roots(const SpecializedCubic& spec, const Integer& x0) {
  const Integer disc = -3 * x0 * x0 - 4 * spec.p0;
  auto s = perfect_square(disc);
  if (!s) return {};
  std::vector<Integer> out;
  for (const Integer& num : {Integer(-x0 - *s), Integer(-x0 + *s)}) {
    if (mpz_even_p(num.get_mpz_t())) out.push_back(num / 2);
  }
  return out;
}

}  // namespace

RootClassification classify_specialization(const SpecializedCubic& spec, const std::vector<Integer>& roots) {
  if (spec.d0 != -4 * spec.p0 * spec.p0 * spec.p0 - 27 * spec.q0 * spec.q0) {
    throw Error(ErrorKind::InconsistentInput, "specialization discriminant does not match its coefficients");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (sgn(spec.value_at(roots[i])) != 0) {
      throw Error(ErrorKind::InconsistentInput, "listed root " + roots[i].get_str() + " does not satisfy the cubic");
    }
    if (i > 0 && roots[i - 1] >= roots[i]) {
      throw Error(ErrorKind::InconsistentInput, "root list is not strictly ascending");
    }
  }
  if (!roots.empty()) {
    auto expected = cofactor_integer_roots(spec, roots.front());
    expected.push_back(roots.front());
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    if (expected != roots) throw Error(ErrorKind::InconsistentInput, "root list is incomplete");
  }

  RootClassification out{RootClass::Reducible, roots, std::nullopt};
  if (sgn(spec.d0) == 0) {
    // A repeated root of a monic integer cubic is rational, hence integral.
    if (roots.empty()) throw Error(ErrorKind::InconsistentInput, "repeated-root cubic listed without roots");
    out.kind = RootClass::RepeatedRoots;
    return out;
  }
  if (!roots.empty()) return out;
  if (sgn(spec.d0) > 0 && perfect_square(spec.d0)) {
    out.kind = RootClass::IrreducibleCyclicQ;
    return out;
  }
  out.kind = RootClass::IrreducibleMetacyclic;
  if (auto w = w_filter(spec)) out.c = *w / 3;
  return out;
}

namespace {

long double to_long_double(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<long double>(n.get_si());
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  // Refine with the bits below the double mantissa.
  const Integer hi = Integer(std::ldexp(mant, 53)) << static_cast<mp_bitcnt_t>(exp > 53 ? exp - 53 : 0);
  const Integer lo = n - hi;
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp)) +
         static_cast<long double>(mpz_get_d(lo.get_mpz_t()));
}

}  // namespace

CardanoResult cardano_real_root(const SpecializedCubic& spec, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "Cardano tolerance must be positive");
  if (sgn(spec.d0) > 0) {
    throw Error(ErrorKind::CasusIrreducibilis,
                "discriminant " + spec.d0.get_str() + " > 0: three real roots need complex cube roots");
  }
  const Integer minus3d = -3 * spec.d0;
  long double root_term;
  if (auto w = perfect_square(minus3d)) {
    root_term = to_long_double(*w);
  } else {
    root_term = std::sqrt(to_long_double(minus3d));
  }
  const long double q = to_long_double(spec.q0);
  const long double p = to_long_double(spec.p0);
  const long double plus = std::cbrt((-27.0L * q + 3.0L * root_term) / 2.0L);
  const long double minus = std::cbrt((-27.0L * q - 3.0L * root_term) / 2.0L);
  long double x = (plus + minus) / 3.0L;

  auto residual = [&](long double t) { return std::fabs(t * t * t + p * t + q); };
  auto within = [&](long double t) {
    const long double scale = 1.0L + std::fabs(t);
    return residual(t) <= static_cast<long double>(tol) * scale * scale * scale;
  };

  CardanoResult out{x, residual(x), false};
  // Cancellation between the two radicals (large positive p0) can cost
  // digits; Newton steps on the cubic recover them.
  for (int iter = 0; iter < 16 && !within(x); ++iter) {
    const long double slope = 3.0L * x * x + p;
    if (slope == 0.0L) break;
    x -= (x * x * x + p * x + q) / slope;
    out.polished = true;
  }
  out.value = x;
  out.residual = residual(x);
  return out;
}

Integer quadratic_field_discriminant(const Integer& n, const DivisorBudget& budget) {
  const Integer m = squarefree_kernel(n, budget);
  if (mpz_fdiv_ui(m.get_mpz_t(), 4) == 1) return m;
  return 4 * m;
}

bool comment_form_check(const Integer& field_disc) {
  if (!mpz_divisible_ui_p(field_disc.get_mpz_t(), 3)) return false;
  const Integer r = -field_disc / 3;
  if (sgn(r) <= 0) return false;
  if (mpz_divisible_ui_p(r.get_mpz_t(), 3)) return false;
  return squarefree_kernel(r) == r;
}

CofactorReport cofactor_field_disc(const SpecializedCubic& spec, const Integer& x0, const DivisorBudget& budget) {
  if (sgn(spec.value_at(x0)) != 0) {
    throw Error(ErrorKind::NotARoot, x0.get_str() + " is not a root of the specialized cubic");
  }
  CofactorReport rep;
  rep.x0 = x0;
  rep.cofactor = {Integer(spec.p0 + x0 * x0), x0, Integer(1)};
  rep.quad_disc = -3 * x0 * x0 - 4 * spec.p0;
  if (perfect_square(rep.quad_disc)) {
    rep.totally_reducible = true;
    return rep;
  }
  const Integer fd = quadratic_field_discriminant(rep.quad_disc, budget);
  rep.field_disc = fd;
  if (mpz_divisible_ui_p(fd.get_mpz_t(), 3)) rep.r = -fd / 3;
  rep.comment_holds = comment_form_check(fd);
  return rep;
}

}  // namespace cubicdio
