#pragma once

// Several variables: prime subsets of N^n, the ideals I_A = <x1..xn, 1 + X^a>
// and the two B[x, y] primes P1, P2 whose A is empty.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolprime/family.hpp"
#include "boolprime/ideals.hpp"
#include "boolprime/subset_n.hpp"
#include "json.hpp"

namespace boolprime {

struct PrimeCheckN {
  bool prime = true;
  std::optional<std::pair<ExpVec, ExpVec>> violation;
};

/// Complete check: every split v = a + b of an element v, with a, b allowed by
/// `reading`, has a or b in A. The first violation in lex order of a is kept.
PrimeCheckN is_prime_subset_n(const PrimeSubsetN& A,
                              SubsetReading reading = SubsetReading::NonNegativeNonZero);

/// Support test: f = 0, or 1 not in Supp(f), or X^a in Supp(f) for some a in A.
bool member_IA_n(const Poly& f, const PrimeSubsetN& A);

IdealSpec build_IA_n(const PrimeSubsetN& A);
IdealSpec build_P1();
IdealSpec build_P2();

/// primality_search over the total-degree-D simplex.
PrimalityReport primality_search_n(const IdealSpec& spec, Exp D, unsigned workers = 0);

/// {a : 1 + X^a in the ideal} with every coordinate <= box.
PrimeSubsetN extract_A_n_subset(const IdealSpec& spec, Exp box);

struct ConjectureCase {
  std::string name;
  PrimeSubsetN A;
  PrimeCheckN check;
};

/// For each named prime spec, whether {a : 1 + X^a in P} (box-limited) is a
/// prime subset. A violation would refute the conjecture at that box.
std::vector<ConjectureCase> conjecture_check(const std::vector<std::pair<std::string, IdealSpec>>& primes,
                                             Exp box);

void to_json(nlohmann::json& j, const PrimeCheckN& c);
void to_json(nlohmann::json& j, const ConjectureCase& c);

}  // namespace boolprime
