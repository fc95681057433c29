#include <numeric>

#include "boolprime/subsets.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boolprime;

namespace {

std::vector<Nat> from_mask(unsigned mask, Nat top) {
  std::vector<Nat> v;
  for (Nat a = 1; a <= top; ++a) {
    if ((mask >> (a - 1)) & 1U) v.push_back(a);
  }
  return v;
}

}  // namespace

TEST_CASE("is_prime_subset examples") {
  CHECK(is_prime_subset(std::vector<Nat>{1}).prime);
  CHECK(is_prime_subset(std::vector<Nat>{}).prime);
  const PrimeCheck c = is_prime_subset(std::vector<Nat>{2});
  CHECK_FALSE(c.prime);
  REQUIRE(c.violation);
  CHECK(*c.violation == Violation{1, 1});
  CHECK_THROWS_AS(PrimeSubset::finite({2}), NotPrimeSubset);
}

TEST_CASE("prime subset duality against the closure oracle") {
  for (unsigned mask = 0; mask < 256; ++mask) {
    const auto A = from_mask(mask, 8);
    CHECK(is_prime_subset(A).prime == oracle::complement_closed(A, 16));
  }
}

TEST_CASE("complement generators are minimal and generate the complement") {
  CHECK(complement_generators(std::vector<Nat>{1}) == std::vector<Nat>{2, 3});
  CHECK(complement_generators(std::vector<Nat>{1, 2, 3}) == std::vector<Nat>{4, 5, 6, 7});
  CHECK(complement_generators(std::vector<Nat>{}) == std::vector<Nat>{1});
  for (unsigned mask = 0; mask < 256; ++mask) {
    const auto A = from_mask(mask, 8);
    if (!is_prime_subset(A).prime) continue;
    const auto gens = complement_generators(A);
    // Additive closure of gens up to 30 equals N - A there.
    std::vector<bool> reach(31, false);
    reach[0] = true;
    for (Nat n = 1; n <= 30; ++n) {
      for (Nat g : gens) {
        if (g <= n && reach[n - g]) reach[n] = true;
      }
    }
    for (Nat n = 1; n <= 30; ++n) {
      const bool in_a = std::find(A.begin(), A.end(), n) != A.end();
      CHECK(reach[n] == !in_a);
    }
    // No generator is a sum of complement elements below it.
    for (Nat g : gens) {
      for (Nat x = 1; x < g; ++x) {
        if (reach[x] && reach[g - x]) FAIL("generator " << g << " is not minimal");
      }
    }
  }
  CHECK_THROWS(complement_generators(std::vector<Nat>{2}));
}

TEST_CASE("frobenius against the scan oracle") {
  CHECK(frobenius(std::vector<Nat>{3, 5}) == 7);
  CHECK(frobenius(std::vector<Nat>{3, 4}) == 5);
  CHECK(frobenius(std::vector<Nat>{1}) == 0);
  for (Nat p = 2; p <= 12; ++p) {
    for (Nat q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(frobenius(std::vector<Nat>{p, q}) == p * q - p - q);
      for (Nat r = q + 1; r <= 14; ++r) {
        CHECK(static_cast<std::int64_t>(frobenius(std::vector<Nat>{p, q, r})) == oracle::frobenius({p, q, r}));
      }
    }
  }
  CHECK_THROWS_AS(frobenius(std::vector<Nat>{2, 4}), PreconditionError);
}

TEST_CASE("cofinite membership and parameters") {
  const PrimeSubset A = PrimeSubset::cofinite(2, {2, 3});
  CHECK_FALSE(A.contains(4));
  CHECK(A.contains(2));
  CHECK(A.contains(1));
  CHECK(A.contains(3));
  CHECK_FALSE(A.contains(6));
  CHECK(PrimeSubset::finite({1}).contains(1));
  const ClassParams p = class_params(A);
  CHECK(p.d == 2);
  CHECK(*p.frobenius == 1);
  CHECK(*p.big_a == 4);
  const ClassParams f = class_params(PrimeSubset::finite({1}));
  CHECK(f.d == 1);
  CHECK(*f.alpha == 2);
  CHECK(*class_params(PrimeSubset()).alpha == 1);
  CHECK(A.class_d() == 2);
  CHECK(is_prime_subset(A, 40).prime);
}

TEST_CASE("from_prefix recovers the subset") {
  for (const PrimeSubset& a : {PrimeSubset::finite({1, 2, 4}), PrimeSubset::cofinite(2, {2, 3}),
                               PrimeSubset::cofinite(3, {1}), PrimeSubset::cofinite(2, {3, 4, 5}), PrimeSubset()}) {
    const auto prefix = a.elements_up_to(24);
    CHECK(PrimeSubset::from_prefix(prefix, 24) == a);
  }
}

TEST_CASE("subset text and JSON") {
  CHECK(to_string(parse_prime_subset("d=2;S=2,3")) == "d=2;S=2,3");
  CHECK(parse_prime_subset("{1,2}") == PrimeSubset::finite({1, 2}));
  CHECK(parse_prime_subset("") == PrimeSubset());
  try {
    parse_prime_subset("1,x");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  for (const PrimeSubset& a : {PrimeSubset::finite({1, 3}), PrimeSubset::cofinite(2, {2, 3})}) {
    const nlohmann::json j = a;
    CHECK(j.get<PrimeSubset>() == a);
  }
}
