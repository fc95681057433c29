#include "boolprime/classify.hpp"
#include "doctest.h"
#include "suite.hpp"

using namespace boolprime;

namespace {
Poly P(std::string_view s) { return parse_poly(s); }
const PrimeSubset kOne = PrimeSubset::finite({1});
}  // namespace

TEST_CASE("property star examples") {
  CHECK(property_star(P("1+x^2+x^3"), kOne).holds);
  const StarCheck c1 = property_star(P("1+x"), kOne);
  CHECK_FALSE(c1.holds);
  CHECK(*c1.failed_clause == 1);
  const StarCheck c2 = property_star(P("1+x^2+x^4"), kOne);
  CHECK_FALSE(c2.holds);
  CHECK(*c2.failed_clause == 2);
  CHECK_THROWS_AS(property_star(P("x^2+x^3"), kOne), PreconditionError);
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(build_family(family::JA{PrimeSubset()}), InvalidFamily);
  CHECK_THROWS_AS(build_family(family::StarD1{PrimeSubset::cofinite(2, {2, 3}), {}}), InvalidFamily);
  CHECK_THROWS_AS(build_family(family::StarDgt1{PrimeSubset::cofinite(2, {1}), {}}), InvalidFamily);
  CHECK_THROWS_AS(build_family(family::StarD1{kOne, {P("1+x^2+x^4")}}), InvalidFamily);
  CHECK_NOTHROW(build_family(family::StarD1{kOne, {P("1+x^2+x^3")}}));
}

TEST_CASE("category I primality matches prime subsets") {
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Poly> g{P("x")};
    std::vector<Nat> A;
    for (Nat a = 1; a <= 4; ++a) {
      if ((mask >> (a - 1)) & 1U) {
        A.push_back(a);
        g.push_back(Poly::from_exponents({0, a}));
      }
    }
    CHECK(primality_search(IdealSpec::explicit_ideal(g, 1), 5).prime_up_to_bound() == is_prime_subset(A).prime);
  }
}

TEST_CASE("branch detection") {
  const IdealSpec star = build_family(family::StarD1{kOne, {}});
  const BranchDetection s = detect_branch_d1(star, kOne, 6);
  CHECK(s.outcome == DetectOutcome::Star);
  CHECK(*s.witness == P("1+x^2+x^3"));
  const BranchDetection j = detect_branch_d1(build_family(family::JA{kOne}), kOne, 6);
  CHECK(j.outcome == DetectOutcome::JA);
  CHECK(*j.witness == P("1+x+x^3"));
  CHECK_THROWS_AS(detect_branch_d1(build_family(family::CatI{kOne}), kOne, 6), PreconditionError);

  const PrimeSubset A = PrimeSubset::cofinite(2, {2, 3});
  const BranchDetection dj = detect_branch_dgt1(build_family(family::JA{A}), A, 12);
  CHECK(dj.outcome == DetectOutcome::JA);
  CHECK(member(P("1+x^2+x^8"), build_family(family::JA{A})).is_member);
  const BranchDetection ds = detect_branch_dgt1(build_family(family::StarDgt1{A, {}}), A, 12);
  CHECK(ds.outcome == DetectOutcome::Star);
  CHECK(*ds.witness == P("1+x^4+x^6"));
  const PrimeSubset no_d = PrimeSubset::cofinite(2, {1});
  CHECK_THROWS_AS(detect_branch_dgt1(build_family(family::JA{no_d}), no_d, 12), PreconditionError);
}

TEST_CASE("classify examples") {
  const ClassificationReport r = classify(build_family(family::StarD1{kOne, {}}), 6);
  CHECK(r.category == Category::II);
  CHECK(r.A == kOne);
  CHECK(r.d == 1);
  CHECK(r.branch == Branch::Star);
  CHECK(r.Q.empty());
  CHECK(r.reconstruction_equal);

  const ClassificationReport c = classify(build_family(family::CatI{kOne}), 6);
  CHECK(c.category == Category::I);
  CHECK(c.branch == Branch::IA);

  const ClassificationReport d = classify(build_family(family::JA{PrimeSubset::cofinite(2, {2, 3})}), 12);
  CHECK(d.d == 2);
  CHECK(d.branch == Branch::JA);

  CHECK(classify(IdealSpec::explicit_ideal({}, 1), 4).branch == Branch::Zero);
  CHECK_THROWS_AS(classify(IdealSpec::explicit_ideal({P("1+x")}), 3), NotPrimeIdeal);
}

TEST_CASE("fixture round trip and JSON") {
  for (const auto& fx : suite::classify_fixtures()) {
    CAPTURE(fx.label);
    const ClassificationReport r = classify(build_family(fx.desc), fx.bound);
    CHECK(to_string(r.branch) == fx.branch);
    CHECK(to_string(r.category) == fx.category);
    CHECK(r.reconstruction_equal);
    CHECK(r.Q == reduced_q(fx.desc, fx.bound));
    CHECK(nlohmann::json(r).get<ClassificationReport>() == r);
    const nlohmann::json jd = fx.desc;
    CHECK(jd.get<FamilyDesc>() == fx.desc);
  }
}

TEST_CASE("Q recovery keeps non-redundant star polynomials") {
  const PrimeSubset A = PrimeSubset::finite({1, 2, 3});
  const IdealSpec base = build_family(family::StarD1{A, {}});
  CHECK(recover_q(base, base, A, 7).empty());
  const Poly q = P("1+x^2+x^3+x^5");
  REQUIRE(property_star(q, kOne).holds);
  const IdealSpec with_q = build_family(family::StarD1{kOne, {q}});
  const IdealSpec base1 = build_family(family::StarD1{kOne, {}});
  CHECK(recover_q(with_q, base1, kOne, 6) == std::vector<Poly>{q});
  CHECK(reduced_q(family::StarD1{kOne, {q, P("1+x^2+x^3")}}, 6) == std::vector<Poly>{q});
  // This star polynomial breaks primality; classify refuses the ideal.
  CHECK_THROWS_AS(classify(with_q, 6), NotPrimeIdeal);
}
