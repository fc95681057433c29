#include "boolprime/identities.hpp"
#include "doctest.h"

using namespace boolprime;

namespace {
Poly P(std::string_view s, std::size_t n = 1) { return parse_poly(s, n); }

bool all_equal(const std::vector<IdentityCheckResult>& rs) {
  for (const auto& r : rs) {
    if (!r.equal) return false;
  }
  return !rs.empty();
}
}  // namespace

TEST_CASE("eq_product instances") {
  for (auto [r, s] : {std::pair<Exp, Exp>{1, 1}, {2, 3}, {1, 4}}) {
    const IdentityCheckResult x = check_eq_product(r, s);
    CHECK(x.equal);
    CHECK(x.symmetric_difference.is_zero());
  }
  CHECK_THROWS_AS(check_eq_product(3, 2), PreconditionError);
  const auto sw = sweep_eq_product(6);
  CHECK(sw.size() == 21);
  CHECK(all_equal(sw));
}

TEST_CASE("three-term identity") {
  CHECK(check_three_term(P("1"), P("x^2"), P("x^5")).equal);
  const Poly f = P("1+x^3+x^4");
  CHECK(check_three_term(f, f, f).equal);
  CHECK(check_three_term(P("x+y", 2), P("1", 2), P("x*y^2", 2)).equal);
  CHECK(all_equal(sweep_three_term(100, 6, 42)));
  CHECK(sweep_three_term(20, 6, 42) == sweep_three_term(20, 6, 42));
}

TEST_CASE("q formulas") {
  for (std::uint64_t alpha = 2; alpha <= 6; ++alpha) {
    for (std::uint64_t m = alpha + 2; m <= alpha + 8; ++m) CHECK(q_closed_form(alpha, m) == q_definitional(alpha, m));
  }
  CHECK(q_closed_form(2, 4) == 11);
}

TEST_CASE("product rules") {
  const auto r1 = sweep_product_rule1();
  CHECK(r1.size() == 12);
  CHECK(all_equal(r1));
  for (const auto& x : r1) CHECK(x.q.has_value());
  CHECK_THROWS_AS(check_product_rule1(2, 3), PreconditionError);
  for (const auto& rs : {sweep_product_rule2(6), sweep_product_rule3(7), sweep_product_rule4(8)}) {
    CHECK_FALSE(rs.empty());
    for (const auto& x : rs) {
      for (const auto& f : x.forms) {
        if (f.required) CHECK(f.equal);
      }
    }
  }
}

TEST_CASE("multivariate identities") {
  CHECK(check_multivar_identities(1, 2, 0, 3, P("x^2+y", 2)).equal);
  CHECK(check_multivar_identities(2, 1, 1, 1, Poly::zero(2)).equal);
  const auto sw = sweep_multivar(20, 7);
  CHECK(all_equal(sw));
  CHECK(sw == sweep_multivar(20, 7));
}

TEST_CASE("identity JSON round trip") {
  for (const auto& x : {check_product_rule1(3, 6), check_eq_product(2, 3), check_three_term(P("1"), P("x"), P("x^4"))}) {
    CHECK(nlohmann::json(x).get<IdentityCheckResult>() == x);
  }
}
