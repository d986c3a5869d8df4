#include <doctest.h>

#include <map>
#include <random>

#include "cubicdio/error.hpp"
#include "cubicdio/polyring.hpp"
#include "oracles.hpp"

using namespace cubicdio;

namespace {

Integer random_big(std::mt19937_64& rng) {
  Integer v(std::to_string(rng()));  // up to 2^64
  return (rng() & 1) ? Integer(-v) : v;
}

Poly random_big_poly(std::mt19937_64& rng, int max_degree) {
  std::vector<Integer> c(rng() % static_cast<unsigned>(max_degree + 1) + 1);
  for (auto& x : c) x = random_big(rng);
  return Poly(std::move(c));
}

bool primitive_positive(const Poly& g) {
  return content_primitive(g).content == 1 && sgn(g.leading()) > 0;
}

}  // namespace

TEST_CASE("canonical form and degree") {
  CHECK(Poly{0, 0, 0}.is_zero());
  CHECK(Poly{}.degree().is_minus_infinity());
  CHECK(Poly{1, 2, 0}.degree() == Degree::of(1));
  CHECK(Degree::minus_infinity() < Degree::of(0));
  CHECK_FALSE(Degree::of(0) < Degree::minus_infinity());
}

TEST_CASE("eval") {
  CHECK(eval(Poly{-1, 1}, 5) == 4);
  CHECK(eval(Poly{0, 3}, 0) == 0);
  const Poly p{1, -2, 1, 4};
  CHECK(eval(p, -2) == -23);
  CHECK(static_cast<long>(oracle::eval_naive({1, -2, 1, 4}, -2)) == -23);
  // No overflow at large magnitude.
  const Integer big("123456789012345678901234567890");
  CHECK(eval(Poly{0, 0, 1}, big) == big * big);
}

TEST_CASE("arith") {
  CHECK(arith(ArithOp::Mul, Poly{-1, 1}, Poly{1, 1}) == Poly{-1, 0, 1});
  CHECK(arith(ArithOp::Add, Poly{0, 3}, Poly{-1, 1}) == Poly{-1, 4});
  CHECK(arith(ArithOp::Mul, Poly{0, 0, 1}, Poly{}).coeffs().empty());
  CHECK(arith(ArithOp::Sub, Poly{1, 2}, Poly{1, 2}).is_zero());
  CHECK(arith(ArithOp::Neg, Poly{1, -2}) == Poly{-1, 2});
}

TEST_CASE("derivative") {
  CHECK(derivative(Poly{12, -8, -1, 1}) == Poly{-8, -2, 3});
  CHECK(derivative(Poly{7}).is_zero());
  CHECK(derivative(Poly{-27, 54, -27, -108}) == Poly{54, -54, -324});
}

TEST_CASE("content_primitive") {
  auto [c1, p1] = content_primitive(Poly{-9, 0, 6});
  CHECK(c1 == 3);
  CHECK(p1 == Poly{-3, 0, 2});
  auto [c2, p2] = content_primitive(Poly{0, -4});
  CHECK(c2 == 4);
  CHECK(p2 == Poly{0, -1});
  auto [c3, p3] = content_primitive(Poly{});
  CHECK(c3 == 0);
  CHECK(p3.is_zero());
}

TEST_CASE("gcd examples") {
  CHECK(gcd(Poly{-1, 0, 1}, Poly{1, -2, 1}) == Poly{-1, 1});
  CHECK(gcd(Poly{0, 6}, Poly{}) == Poly{0, 1});
  CHECK(gcd(Poly{1, 0, 1}, Poly{0, 1, 0, 1}) == Poly{1, 0, 1});
  CHECK(gcd(Poly{}, Poly{}).is_zero());
  CHECK(gcd(Poly{0, -6}, Poly{}) == Poly{0, 1});
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(Poly{12, -8, -1, 1}) == Poly{-6, 1, 1});
  CHECK(squarefree_part(Poly{1, 0, 1}) == Poly{1, 0, 1});
  CHECK(squarefree_part(Poly{0, 0, 0, 0, 1}) == Poly{0, 1});
  CHECK_THROWS_AS(squarefree_part(Poly{}), Error);
}

TEST_CASE("count_simple_roots") {
  CHECK(count_simple_roots(Poly{12, -8, -1, 1}) == 1);
  CHECK(count_simple_roots(Poly{1, -2, 1, 4}) == 3);
  CHECK(count_simple_roots(Poly{0, 0, 0, 0, 1}) == 0);
  CHECK(count_simple_roots(Poly{5}) == 0);
  try {
    count_simple_roots(Poly{});
    FAIL("expected ZeroPolynomial");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPolynomial);
  }
}

TEST_CASE("pseudo division identity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_big_poly(rng, 6);
    const Poly b = random_big_poly(rng, 3);
    if (b.is_zero()) continue;
    const auto [scale, quo, rem] = pseudo_divide(a, b);
    CHECK(scale * a == quo * b + rem);
    CHECK(rem.degree() < b.degree());
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const Poly p = random_big_poly(rng, 5);
    const Poly q = random_big_poly(rng, 5);
    const Integer n = random_big(rng);
    REQUIRE(eval(p * q, n) == eval(p, n) * eval(q, n));
    REQUIRE(eval(p + q, n) == eval(p, n) + eval(q, n));
  }
}

TEST_CASE("property: gcd divides both inputs and is normalized") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const Poly common = oracle::to_poly(oracle::random_small_poly(rng, 3, 9));
    const Poly a = common * oracle::to_poly(oracle::random_small_poly(rng, 3, 9));
    const Poly b = common * oracle::to_poly(oracle::random_small_poly(rng, 3, 9));
    const Poly g = gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    REQUIRE(primitive_positive(g));
    if (!a.is_zero()) CHECK(divides_over_q(g, a));
    if (!b.is_zero()) CHECK(divides_over_q(g, b));
    // Any common factor divides the gcd.
    if (!common.is_zero() && !a.is_zero() && !b.is_zero()) CHECK(divides_over_q(common, g));
  }
}

TEST_CASE("property: squarefree part has no repeated roots") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Poly f = oracle::to_poly(oracle::random_small_poly(rng, 2, 5));
    const Poly g = oracle::to_poly(oracle::random_small_poly(rng, 2, 5));
    const Poly p = f * f * g;
    if (p.is_zero()) continue;
    const Poly s = squarefree_part(p);
    CHECK(gcd(s, derivative(s)).degree() == Degree::of(0));
    CHECK(divides_over_q(s, p));
  }
}

TEST_CASE("property: count_simple_roots matches multiplicities of linear products") {
  // Every multiset of roots in [-5, 5] of total size <= 6.
  std::vector<int> mult(11, 0);
  std::size_t checked = 0;
  auto visit = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == 11) {
      Poly p = Poly::constant(1);
      std::size_t expected = 0;
      for (int j = 0; j < 11; ++j) {
        if (mult[j] == 1) ++expected;
        for (int m = 0; m < mult[j]; ++m) p *= Poly{-(j - 5), 1};
      }
      REQUIRE(count_simple_roots(p) == expected);
      REQUIRE(count_simple_roots(Integer(-6) * p) == expected);
      ++checked;
      return;
    }
    for (int m = 0; m <= remaining; ++m) {
      mult[idx] = m;
      self(self, idx + 1, remaining - m);
    }
    mult[idx] = 0;
  };
  visit(visit, 0, 6);
  CHECK(checked == 12376);
}
