#include <random>

#include "boolprime/poly.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boolprime;

namespace {

Poly P(std::string_view s, std::size_t n = 1) { return parse_poly(s, n); }

Poly random_poly(std::mt19937_64& rng, std::size_t nvars, Exp max_exp) {
  std::vector<std::vector<Exp>> terms;
  const int count = static_cast<int>(rng() % 6);
  for (int i = 0; i < count; ++i) {
    std::vector<Exp> t(nvars);
    for (auto& e : t) e = static_cast<Exp>(rng() % (max_exp + 1));
    terms.push_back(t);
  }
  return Poly::from_terms(nvars, terms);
}

}  // namespace

TEST_CASE("addition is support union") {
  CHECK(P("1+x") + P("1+x") == P("1+x"));
  CHECK(P("1+x^2") + P("x^2+x^3") == P("1+x^2+x^3"));
  for (Exp a = 1; a <= 4; ++a) {
    for (Exp m = a + 1; m <= 7; ++m) {
      CHECK(Poly::from_exponents({0, a}) + Poly::from_exponents({0, a, m}) == Poly::from_exponents({0, a, m}));
    }
  }
}

TEST_CASE("multiplication examples") {
  CHECK(P("1+x+x^3") * P("1+x^2+x^3") == P("1+x") * P("1+x^2") * P("1+x^3"));
  CHECK(P("1+x^2+x^3") * P("1+x+x^3") == pow(P("1+x"), 6));
  CHECK((P("1+x^2") * Poly::zero()).is_zero());
  CHECK(pow(P("1+x"), 3) == P("1+x+x^2+x^3"));
  CHECK(pow(P("x^4+x"), 0) == Poly::one());
  CHECK(P("1+x^2+x^5") * pow(P("1+x"), 5) == pow(P("1+x"), 10));
}

TEST_CASE("product matches the term-by-term oracle") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 3u}) {
    for (int i = 0; i < 300; ++i) {
      const Poly f = random_poly(rng, n, 12);
      const Poly g = random_poly(rng, n, 12);
      CHECK(f * g == oracle::mul(f, g));
      CHECK(f * g == g * f);
    }
  }
  // Wide supports exercise the multi-word paths.
  for (int i = 0; i < 50; ++i) {
    const Poly f = random_poly(rng, 1, 300);
    const Poly g = random_poly(rng, 1, 300);
    CHECK(f * g == oracle::mul(f, g));
  }
}

TEST_CASE("semiring laws") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const Poly f = random_poly(rng, 2, 5), g = random_poly(rng, 2, 5), h = random_poly(rng, 2, 5);
    CHECK(f + f == f);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("degree and leading test") {
  CHECK(degree(P("1+x^2+x^3")) == 3);
  CHECK(has_subleading(P("1+x^2+x^3")));
  CHECK_FALSE(has_subleading(P("1+x^3")));
  CHECK_THROWS_AS(degree(Poly::zero()), ZeroPolynomial);
}

TEST_CASE("parse and format") {
  for (const char* s : {"0", "1", "x", "1+x^2+x^3", "x^100+x^3"}) CHECK(P(to_string(P(s))) == P(s));
  CHECK(P("x^3+1+x^3") == P("1+x^3"));
  CHECK(P("x*y+y^2", 2) == P("x1*x2+x2^2", 2));
  CHECK(P(to_string(P("1+x*y^2+z", 3)), 3) == P("1+x*y^2+z", 3));
  try {
    P("1+x+^3");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P("1+y"), ParseError);
  CHECK_THROWS_AS(P("1+x^"), ParseError);
  CHECK(parse_poly_list("1+x,x^3").size() == 2);
}

TEST_CASE("variable mismatch") {
  CHECK_THROWS_AS(P("x") * P("x", 2), VariableMismatch);
  CHECK_THROWS_AS(P("x") + P("x", 2), VariableMismatch);
}

TEST_CASE("poly JSON round trip") {
  for (const Poly& f : {P("1+x^2+x^3"), Poly::zero(), P("x*y+1", 2)}) {
    const nlohmann::json j = f;
    CHECK(j.get<Poly>() == f);
  }
}
