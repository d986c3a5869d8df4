#include <doctest.h>

#include <random>

#include "cubicdio/polyexpr.hpp"
#include "malformed_corpus.hpp"

using namespace cubicdio;

TEST_CASE("parse_poly examples") {
  CHECK(parse_poly("3*y") == Poly{0, 3});
  CHECK(parse_poly("y^3 - 2*y + 1") == Poly{1, -2, 0, 1});
  CHECK(parse_poly("-(y-1)^2") == Poly{-1, 2, -1});
  CHECK(parse_poly(" ( y + 1 ) * ( y - 1 ) ") == Poly{-1, 0, 1});
  CHECK(parse_poly("-y^2") == Poly{0, 0, -1});
  CHECK(parse_poly("--y") == Poly{0, 1});
  CHECK(parse_poly("y^0") == Poly{1});
  CHECK(parse_poly("y^064") == pow(Poly{0, 1}, 64));
  CHECK(parse_poly("0*y + 0").is_zero());
  CHECK(parse_poly("123456789012345678901234567890*y") ==
        Poly(std::vector<Integer>{Integer(0), Integer("123456789012345678901234567890")}));
}

TEST_CASE("parse errors carry column and expected tokens") {
  try {
    parse_poly("y^-1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(e.expected() == std::vector<std::string>{"non-negative integer exponent"});
  }
  try {
    parse_poly("y^65");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("exponent <= 64") != std::string::npos);
  }
  for (const auto& c : malformed_corpus()) {
    CAPTURE(c.text);
    try {
      parse_poly(c.text);
      FAIL("accepted malformed input");
    } catch (const ParseError& e) {
      CHECK(e.column() == c.column);
      CHECK_FALSE(e.expected().empty());
    }
  }
}

TEST_CASE("render_poly") {
  CHECK(render_poly(Poly{0, 3}) == "3*y");
  CHECK(render_poly(Poly{}) == "0");
  CHECK(render_poly(Poly{-1, 2, -1}) == "-y^2 + 2*y - 1");
  CHECK(render_poly(Poly{1, -2, 0, 1}) == "y^3 - 2*y + 1");
  CHECK(render_poly(Poly{-5}) == "-5");
}

TEST_CASE("property: parse inverts render") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  std::uniform_int_distribution<int> deg(0, 8);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
      // Bias toward 0 and +-1 to exercise the elision rules.
      const long pick = static_cast<long>(rng() % 6);
      x = pick == 0 ? 0 : pick == 1 ? 1 : pick == 2 ? -1 : coef(rng);
    }
    const Poly p(std::move(c));
    REQUIRE(parse_poly(render_poly(p)) == p);
  }
}

TEST_CASE("property: render . parse is idempotent") {
  const std::vector<std::string> corpus{
      "3*y", "y^3 - 2*y + 1", "-(y-1)^2", "(y+1)^5 - y*(y-2)", "2*(3*y - 4)^2 + 7",
      "-y", "0", "y^8 - y^7 + y", "((y))", "-(-(y+2))*3",
  };
  for (const auto& s : corpus) {
    const std::string once = render_poly(parse_poly(s));
    CHECK(render_poly(parse_poly(once)) == once);
  }
}
