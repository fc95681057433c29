#pragma once

// Brute-force reference implementations. They share no code with the
// library's kernels and are deliberately slow.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "boolprime/poly.hpp"

namespace boolprime::oracle {

/// Term-by-term product: every pair of terms, summed coordinatewise.
inline Poly mul(const Poly& f, const Poly& g) {
  const std::size_t n = f.nvars();
  std::set<std::vector<Exp>> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      std::vector<Exp> t(n);
      for (std::size_t v = 0; v < n; ++v) t[v] = f.term(i)[v] + g.term(j)[v];
      terms.insert(t);
    }
  }
  return Poly::from_terms(n, std::vector<std::vector<Exp>>(terms.begin(), terms.end()));
}

/// Largest integer not a non-negative combination of gens (gcd 1), by
/// scanning representability up to the product of the two smallest gens.
inline std::int64_t frobenius(const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> g = gens;
  std::sort(g.begin(), g.end());
  const std::uint64_t limit = g.size() == 1 ? g[0] + 1 : static_cast<std::uint64_t>(g[0]) * g[1] + 1;
  std::vector<bool> rep(limit + 1, false);
  rep[0] = true;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    for (auto x : g) {
      if (x <= n && rep[n - x]) rep[n] = true;
    }
  }
  std::int64_t last = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (!rep[n]) last = static_cast<std::int64_t>(n);
  }
  return last;
}

/// Subset A of {1..} is prime iff its complement (up to `bound`) is closed
/// under sums that stay below `bound`.
inline bool complement_closed(const std::vector<std::uint32_t>& A, std::uint32_t bound) {
  std::vector<bool> in(bound + 1, false);
  for (auto a : A) {
    if (a <= bound) in[a] = true;
  }
  for (std::uint32_t x = 1; x <= bound; ++x) {
    for (std::uint32_t y = x; x + y <= bound; ++y) {
      if (!in[x] && !in[y] && in[x + y]) return false;
    }
  }
  return true;
}

/// Univariate membership by searching unions of at most |Supp(f)| translates
/// x^k g (deg <= deg f) whose union is exactly Supp(f). Supports are bitmasks.
inline bool member(std::uint64_t f, const std::vector<std::uint64_t>& gens) {
  if (f == 0) return true;
  const int top = 63 - __builtin_clzll(f);
  std::vector<std::uint64_t> translates;
  for (auto g : gens) {
    if (g == 0) continue;
    const int dg = 63 - __builtin_clzll(g);
    for (int k = 0; k + dg <= top; ++k) translates.push_back(g << k);
  }
  const int budget = __builtin_popcountll(f);
  auto rec = [&](auto&& self, std::size_t from, std::uint64_t acc, int used) -> bool {
    if (acc == f) return true;
    if (used == budget) return false;
    for (std::size_t i = from; i < translates.size(); ++i) {
      const std::uint64_t next = acc | translates[i];
      if (next == acc) continue;
      if ((next & ~f) != 0) continue;
      if (self(self, i + 1, next, used + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0, 0);
}

}  // namespace boolprime::oracle
