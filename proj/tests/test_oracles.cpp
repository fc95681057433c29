// The oracles are frozen against hand-computed values before the library is
// compared against them.

#include "doctest.h"
#include "oracles.hpp"

using namespace boolprime;

TEST_CASE("oracle frozen values") {
  CHECK(oracle::frobenius({3, 5}) == 7);
  CHECK(oracle::frobenius({3, 4}) == 5);
  CHECK(oracle::frobenius({1}) == 0);
  CHECK(oracle::frobenius({2, 3}) == 1);
  CHECK(oracle::frobenius({6, 9, 20}) == 43);
  CHECK(oracle::complement_closed({1}, 16));
  CHECK(oracle::complement_closed({}, 16));
  CHECK_FALSE(oracle::complement_closed({2}, 16));
  CHECK(oracle::complement_closed({1, 2, 4}, 16));
  CHECK_FALSE(oracle::complement_closed({1, 3}, 16) == false);
  // 1+x^2+x^3 (0b1101) is in <1+x> only via 1+x shifts covering {0,1}: not a member.
  CHECK_FALSE(oracle::member(0b1101, {0b11}));
  CHECK(oracle::member(0b1111, {0b11}));
  CHECK(oracle::member(0b1101, {0b1101}));
  CHECK(oracle::member(0, {}));
  CHECK_FALSE(oracle::member(0b1, {}));
  CHECK(oracle::member(0b1111111, {0b11}));  // (1+x)^6
  const Poly p = oracle::mul(parse_poly("1+x"), parse_poly("1+x^2"));
  CHECK(p == parse_poly("1+x+x^2+x^3"));
}
