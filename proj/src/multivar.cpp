#include "boolprime/multivar.hpp"

#include <algorithm>

#include "boolprime/errors.hpp"

namespace boolprime {
namespace {

bool allowed(const ExpVec& v, SubsetReading reading) {
  if (reading == SubsetReading::AllPositive) {
    return std::all_of(v.begin(), v.end(), [](Exp e) { return e >= 1; });
  }
  return std::any_of(v.begin(), v.end(), [](Exp e) { return e != 0; });
}

}  // namespace

PrimeCheckN is_prime_subset_n(const PrimeSubsetN& A, SubsetReading reading) {
  PrimeCheckN out;
  const std::size_t n = A.nvars();
  for (const auto& v : A.elements()) {
    // Odometer over 0 <= a <= v in lex order.
    ExpVec a(n, 0);
    ExpVec b(n);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) b[i] = v[i] - a[i];
      if (allowed(a, reading) && allowed(b, reading) && !A.contains(a) && !A.contains(b)) {
        out.prime = false;
        out.violation = std::make_pair(a, b);
        return out;
      }
      std::size_t i = n;
      while (i > 0 && a[i - 1] == v[i - 1]) {
        a[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
      ++a[i - 1];
    }
  }
  return out;
}

bool member_IA_n(const Poly& f, const PrimeSubsetN& A) {
  if (f.nvars() != A.nvars()) throw VariableMismatch(A.nvars(), f.nvars());
  if (f.is_zero() || !f.has_constant()) return true;
  for (const auto& a : A.elements()) {
    if (f.contains(a)) return true;
  }
  return false;
}

IdealSpec build_IA_n(const PrimeSubsetN& A) { return IdealSpec::family(family::CatIN{A}); }
IdealSpec build_P1() { return IdealSpec::family(family::P1{}); }
IdealSpec build_P2() { return IdealSpec::family(family::P2{}); }

PrimalityReport primality_search_n(const IdealSpec& spec, Exp D, unsigned workers) {
  return primality_search(spec, D, workers);
}

PrimeSubsetN extract_A_n_subset(const IdealSpec& spec, Exp box) {
  return PrimeSubsetN(spec.nvars(), extract_A_n(spec, box));
}

std::vector<ConjectureCase> conjecture_check(const std::vector<std::pair<std::string, IdealSpec>>& primes,
                                             Exp box) {
  std::vector<ConjectureCase> out;
  for (const auto& [name, spec] : primes) {
    ConjectureCase c{name, extract_A_n_subset(spec, box), {}};
    c.check = is_prime_subset_n(c.A);
    out.push_back(std::move(c));
  }
  return out;
}

void to_json(nlohmann::json& j, const PrimeCheckN& c) {
  j = nlohmann::json{{"prime", c.prime}};
  if (c.violation) {
    j["violation"] = {c.violation->first, c.violation->second};
  } else {
    j["violation"] = nullptr;
  }
}

void to_json(nlohmann::json& j, const ConjectureCase& c) {
  j = nlohmann::json{{"name", c.name}, {"A", c.A}, {"check", c.check}};
}

}  // namespace boolprime
