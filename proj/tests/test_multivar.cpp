#include "boolprime/multivar.hpp"
#include "doctest.h"

using namespace boolprime;

namespace {
Poly P(std::string_view s) { return parse_poly(s, 2); }
PrimeSubsetN S(std::string_view s) { return parse_prime_subset_n(s, 2); }
}  // namespace

TEST_CASE("prime subsets of N^2") {
  CHECK(is_prime_subset_n(S("{}")).prime);
  CHECK(is_prime_subset_n(S("(1,0)")).prime);
  CHECK(is_prime_subset_n(S("(1,0);(2,0)")).prime);
  const PrimeCheckN c = is_prime_subset_n(S("(1,1)"));
  CHECK_FALSE(c.prime);
  REQUIRE(c.violation);
  CHECK(c.violation->first == ExpVec{0, 1});
  CHECK(c.violation->second == ExpVec{1, 0});
  CHECK_FALSE(is_prime_subset_n(S("(2,0)")).prime);
  CHECK(is_prime_subset_n(S("(1,1)"), SubsetReading::AllPositive).prime);
  CHECK_THROWS(PrimeSubsetN(2, {ExpVec{0, 0}}));
  CHECK_THROWS(PrimeSubsetN(2, {ExpVec{1, 0, 0}}));
}

TEST_CASE("I_A support test agrees with cover membership") {
  for (const char* a : {"{}", "(1,0)", "(1,0);(0,1)", "(1,0);(1,1)"}) {
    const PrimeSubsetN A = S(a);
    const IdealView view(build_IA_n(A), 4);
    for (std::uint32_t m = 0; m < (1U << 10); ++m) {
      std::vector<std::vector<Exp>> terms;
      int idx = 0;
      for (Exp i = 0; i <= 3; ++i) {
        for (Exp j = 0; i + j <= 3; ++j, ++idx) {
          if ((m >> idx) & 1U) terms.push_back({i, j});
        }
      }
      const Poly f = Poly::from_terms(2, terms);
      CHECK(member_IA_n(f, A) == view.contains(f));
    }
  }
}

TEST_CASE("I_A primality matches subset primality at degree 3") {
  for (const char* a : {"{}", "(1,0)", "(1,1)", "(2,0)", "(1,0);(0,1)", "(1,0);(2,0)", "(0,1);(1,1)"}) {
    const PrimeSubsetN A = S(a);
    CAPTURE(a);
    CHECK(primality_search_n(build_IA_n(A), 3).prime_up_to_bound() == is_prime_subset_n(A).prime);
  }
}

TEST_CASE("P1 and P2 basics") {
  CHECK(member(P("x+y"), build_P2()).is_member);
  CHECK(member(P("1+x*y^2+x^2*y"), build_P2()).is_member);
  CHECK_FALSE(member(P("1+x+y"), build_P1()).is_member);
  CHECK(member(P("x+y+x*y"), build_P1()).is_member);
  CHECK(extract_A_n(build_P1(), 3).empty());
  CHECK(extract_A_n(build_P2(), 3).empty());
  CHECK(primality_search_n(build_P2(), 3).prime_up_to_bound());
  CHECK(primality_search_n(build_P1(), 3).prime_up_to_bound());
  // Admitting (c, d) = (0, 0) breaks primality: (1+x)(1+y) lies in the ideal.
  const PrimalityReport lit = primality_search_n(IdealSpec::family(family::P1{true}), 2);
  REQUIRE(lit.counterexample);
  CHECK(lit.counterexample->product == P("1+x+y+x*y"));
  CHECK_FALSE(equal_up_to(build_P1(), build_P2(), 3).equal);
}

TEST_CASE("conjecture check on fixture primes") {
  const auto cases = conjecture_check({{"P2", build_P2()}, {"I", build_IA_n(S("(1,0);(0,1)"))}}, 3);
  REQUIRE(cases.size() == 2);
  for (const auto& c : cases) CHECK(c.check.prime);
  CHECK(cases[1].A == S("(1,0);(0,1)"));
}

TEST_CASE("multivariate JSON") {
  const PrimeSubsetN A = S("(1,0);(0,2)");
  CHECK(nlohmann::json(A).get<PrimeSubsetN>() == A);
  const IdealSpec s = build_IA_n(A);
  IdealSpec back = IdealSpec::explicit_ideal({});
  from_json(nlohmann::json(s), back);
  CHECK(back == s);
  IdealSpec p1 = IdealSpec::explicit_ideal({});
  from_json(nlohmann::json(IdealSpec::family(family::P1{true})), p1);
  CHECK(p1 == IdealSpec::family(family::P1{true}));
}
