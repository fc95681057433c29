#include <random>

#include "boolprime/ideals.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boolprime;

namespace {

Poly P(std::string_view s, std::size_t n = 1) { return parse_poly(s, n); }

Poly from_mask(std::uint64_t m) {
  std::vector<Exp> e;
  for (Exp i = 0; i < 64; ++i) {
    if ((m >> i) & 1U) e.push_back(i);
  }
  return Poly::from_exponents(e);
}

const PrimeSubset kOne = PrimeSubset::finite({1});
IdealSpec star1() { return IdealSpec::family(family::StarD1{kOne, {}}); }
IdealSpec ja1() { return IdealSpec::family(family::JA{kOne}); }

void check_cover(const Poly& f, const MembershipVerdict& v) {
  Poly uni = Poly::zero(f.nvars());
  for (const auto& t : v.cover) {
    const Poly piece = shift(t.generator, t.shift);
    CHECK((piece + f) == f);
    uni = uni + piece;
  }
  CHECK(uni == f);
}

}  // namespace

TEST_CASE("generator enumeration") {
  CHECK(enumerate_generators(ja1(), 3) == std::vector<Poly>{P("1+x"), P("1+x+x^2"), P("1+x+x^3")});
  CHECK(enumerate_generators(star1(), 3) == std::vector<Poly>{P("1+x"), P("1+x+x^2"), P("1+x^2+x^3")});
  CHECK(enumerate_generators(IdealSpec::explicit_ideal({P("1+x")}), 5) == std::vector<Poly>{P("1+x")});
  CHECK(enumerate_generators(IdealSpec::family(family::CatI{PrimeSubset()}), 4) == std::vector<Poly>{P("x")});
}

TEST_CASE("membership examples") {
  const MembershipVerdict v = member(P("1+x^2+x^3"), star1());
  CHECK(v.is_member);
  REQUIRE(v.cover.size() == 1);
  CHECK(v.cover[0].generator == P("1+x^2+x^3"));
  CHECK(v.cover[0].shift == std::vector<Exp>{0});
  CHECK_FALSE(member(P("1+x^2+x^3"), ja1()).is_member);
  CHECK(member(Poly::zero(), ja1()).is_member);
  CHECK(member(Poly::zero(), IdealSpec::explicit_ideal({})).is_member);
  CHECK_FALSE(member(P("1"), IdealSpec::explicit_ideal({})).is_member);
}

TEST_CASE("membership agrees with the union-of-shifts oracle") {
  std::mt19937_64 rng(99);
  for (int s = 0; s < 150; ++s) {
    std::vector<std::uint64_t> masks;
    std::vector<Poly> gens;
    const int n = 1 + static_cast<int>(rng() % 3);
    while (static_cast<int>(masks.size()) < n) {
      const std::uint64_t m = rng() & 0x1F;
      if (m == 0) continue;
      masks.push_back(m);
      gens.push_back(from_mask(m));
    }
    const IdealView view(IdealSpec::explicit_ideal(gens, 1), 6);
    for (std::uint64_t f = 0; f < 128; ++f) {
      const MembershipVerdict v = view.verdict(from_mask(f));
      CHECK(v.is_member == oracle::member(f, masks));
      if (v.is_member) check_cover(from_mask(f), v);
    }
  }
}

TEST_CASE("ideal axioms on sampled members") {
  std::mt19937_64 rng(5);
  const IdealView view(star1(), 24);
  std::vector<Poly> members;
  for (std::uint64_t m = 1; m < 256 && members.size() < 40; ++m) {
    if (view.contains(from_mask(m))) members.push_back(from_mask(m));
  }
  REQUIRE(members.size() >= 10);
  for (int i = 0; i < 300; ++i) {
    const Poly& f = members[rng() % members.size()];
    const Poly& g = members[rng() % members.size()];
    const Poly h = from_mask(rng() & 0xFF);
    CHECK(view.contains(f + g));
    if (!h.is_zero() && degree(f * h) <= 24) CHECK(view.contains(f * h));
  }
}

TEST_CASE("membership is monotone in the generator set") {
  std::mt19937_64 rng(8);
  for (int s = 0; s < 60; ++s) {
    std::vector<Poly> small{from_mask((rng() & 0x1F) | 1)};
    std::vector<Poly> big = small;
    big.push_back(from_mask((rng() & 0x1F) | 1));
    const IdealView a(IdealSpec::explicit_ideal(small, 1), 7);
    const IdealView b(IdealSpec::explicit_ideal(big, 1), 7);
    for (std::uint64_t f = 1; f < 256; ++f) {
      if (a.contains(from_mask(f))) CHECK(b.contains(from_mask(f)));
    }
  }
}

TEST_CASE("extract_A and contains_x") {
  CHECK(extract_A(star1(), 8) == std::vector<Nat>{1});
  CHECK(extract_A(IdealSpec::family(family::CatI{PrimeSubset::finite({1, 2})}), 8) == std::vector<Nat>{1, 2});
  CHECK(extract_A(IdealSpec::explicit_ideal({P("x")}), 8).empty());
  CHECK(contains_x(IdealSpec::family(family::CatI{PrimeSubset::finite({1, 3})})));
  CHECK_FALSE(contains_x(ja1()));
  CHECK_FALSE(contains_x(IdealSpec::explicit_ideal({P("1+x")})));
}

TEST_CASE("primality search examples") {
  const PrimalityReport r = primality_search(IdealSpec::explicit_ideal({P("1+x")}), 3, 1);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->f * r.counterexample->g == pow(P("1+x"), 6));
  CHECK(((r.counterexample->f == P("1+x+x^3") && r.counterexample->g == P("1+x^2+x^3")) ||
         (r.counterexample->g == P("1+x+x^3") && r.counterexample->f == P("1+x^2+x^3"))));
  check_cover(r.counterexample->product, r.counterexample->product_verdict);
  CHECK(primality_search(IdealSpec::explicit_ideal({P("x")}), 4).prime_up_to_bound());
  CHECK(primality_search(star1(), 6).prime_up_to_bound());
}

TEST_CASE("primality reports are identical across worker counts") {
  for (const IdealSpec& s : {IdealSpec::explicit_ideal({P("1+x^2")}), star1(),
                             IdealSpec::explicit_ideal({P("x^2"), P("1+x+x^2")}),
                             IdealSpec::explicit_ideal({P("x+y", 2), P("1+x*y", 2)}, 2)}) {
    const Exp D = s.nvars() == 1 ? 6 : 3;
    const PrimalityReport one = primality_search(s, D, 1);
    for (unsigned w : {2u, 3u, 5u}) CHECK(primality_search(s, D, w) == one);
  }
}

TEST_CASE("equality up to a bound") {
  CHECK(equal_up_to(star1(), IdealSpec::leading_pair(), 7).equal);
  const EqualityReport e = equal_up_to(ja1(), star1(), 3);
  CHECK_FALSE(e.equal);
  CHECK(*e.only_in_second == P("1+x^2+x^3"));
  CHECK(*e.only_in_first == P("1+x+x^3"));
  CHECK(equal_up_to(ja1(), IdealSpec::ja_set_difference(kOne), 7).equal);
  CHECK(equal_up_to(star1(), star1(), 5).equal);
}

TEST_CASE("ideal JSON round trips") {
  for (const IdealSpec& s : {star1(), IdealSpec::explicit_ideal({P("1+x"), P("x^3")}), IdealSpec::leading_pair(),
                             IdealSpec::ja_set_difference(kOne),
                             IdealSpec::family(family::StarDgt1{PrimeSubset::cofinite(2, {2, 3}), {}})}) {
    const nlohmann::json j = s;
    IdealSpec back = IdealSpec::explicit_ideal({});
    from_json(j, back);
    CHECK(back == s);
  }
  const MembershipVerdict v = member(P("1+x+x^2+x^3"), star1());
  CHECK(verdict_from_json(verdict_to_json(v, 1), 1) == v);
  const PrimalityReport r = primality_search(IdealSpec::explicit_ideal({P("1+x")}), 3);
  CHECK(nlohmann::json(r).get<PrimalityReport>() == r);
  const EqualityReport e = equal_up_to(ja1(), star1(), 3);
  CHECK(nlohmann::json(e).get<EqualityReport>() == e);
}
