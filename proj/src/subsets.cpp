#include "boolprime/subsets.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <queue>

namespace boolprime {
namespace {

Nat gcd_all(std::span<const Nat> xs) {
  Nat g = 0;
  for (Nat x : xs) g = std::gcd(g, x);
  return g;
}

bool sorted_contains(const std::vector<Nat>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x,
                            [](auto a, auto b) { return static_cast<std::uint64_t>(a) < static_cast<std::uint64_t>(b); });
}

}  // namespace

// ---------------------------------------------------------------------------
// Numerical semigroups

Nat frobenius(std::span<const Nat> gens) {
  if (gens.empty()) throw PreconditionError("frobenius: empty generator list");
  if (std::find(gens.begin(), gens.end(), Nat{0}) != gens.end()) {
    throw PreconditionError("frobenius: generators must be positive");
  }
  if (gcd_all(gens) != 1) throw PreconditionError("frobenius: generators have gcd != 1");

  const Nat m = *std::min_element(gens.begin(), gens.end());
  if (m == 1) return 0;
  // dist[r] = least element of S congruent to r mod m (the Apery set of m).
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(m, kInf);
  using Item = std::pair<std::uint64_t, Nat>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[0] = 0;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    const auto [dv, r] = pq.top();
    pq.pop();
    if (dv != dist[r]) continue;
    for (Nat g : gens) {
      const Nat next = static_cast<Nat>((r + g) % m);
      const std::uint64_t cand = dv + g;
      if (cand < dist[next]) {
        dist[next] = cand;
        pq.emplace(cand, next);
      }
    }
  }
  const std::uint64_t top = *std::max_element(dist.begin(), dist.end());
  return static_cast<Nat>(top - m);
}

std::vector<Nat> minimal_generators(std::span<const Nat> elems) {
  std::vector<Nat> xs(elems.begin(), elems.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (!xs.empty() && xs.front() == 0) throw PreconditionError("minimal_generators: 0 is not a generator");
  std::vector<Nat> gens;
  if (xs.empty()) return gens;
  const Nat top = xs.back();
  // reach[n]: n is a nonempty sum of generators chosen so far.
  std::vector<bool> reach(static_cast<std::size_t>(top) + 1, false);
  for (Nat x : xs) {
    if (reach[x]) continue;
    gens.push_back(x);
    for (Nat n = x; n <= top; ++n) {
      if (n == x || (reach[n - x])) reach[n] = true;
    }
  }
  return gens;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<Nat> gens) {
  if (gens.empty()) throw PreconditionError("semigroup: empty generator list");
  for (Nat g : gens) {
    if (g == 0) throw PreconditionError("semigroup: generators must be positive");
  }
  if (gcd_all(gens) != 1) throw PreconditionError("semigroup: generators have gcd != 1");
  NumericalSemigroup s;
  s.gens_ = minimal_generators(gens);
  s.frobenius_ = boolprime::frobenius(s.gens_);
  s.table_.assign(static_cast<std::size_t>(s.frobenius_) + 1, false);
  s.table_[0] = true;
  for (std::size_t n = 1; n < s.table_.size(); ++n) {
    for (Nat g : s.gens_) {
      if (g <= n && s.table_[n - g]) {
        s.table_[n] = true;
        break;
      }
    }
  }
  return s;
}

bool NumericalSemigroup::contains(std::uint64_t n) const {
  if (n >= table_.size()) return true;
  return table_[n];
}

// ---------------------------------------------------------------------------
// Prime subsets

PrimeCheck is_prime_subset(std::span<const Nat> elements) {
  std::vector<Nat> a(elements.begin(), elements.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (!a.empty() && a.front() == 0) throw PreconditionError("prime subsets live in {1, 2, 3, ...}");
  for (Nat c : a) {
    for (Nat x = 1; x <= c / 2; ++x) {
      const Nat y = c - x;
      if (!sorted_contains(a, x) && !sorted_contains(a, y)) return {false, Violation{x, y}};
    }
  }
  return {};
}

PrimeCheck is_prime_subset(const PrimeSubset& s, Nat check_bound) {
  if (const auto* f = s.as_finite()) return is_prime_subset(f->elements);
  for (Nat c = 2; c <= check_bound; ++c) {
    if (!s.contains(c)) continue;
    for (Nat x = 1; x <= c / 2; ++x) {
      if (!s.contains(x) && !s.contains(c - x)) return {false, Violation{x, c - x}};
    }
  }
  return {};
}

std::vector<Nat> complement_generators(std::span<const Nat> elements) {
  const auto check = is_prime_subset(elements);
  if (!check.prime) throw NotPrimeSubset(*check.violation);
  if (elements.empty()) return {1};
  const Nat top = *std::max_element(elements.begin(), elements.end());
  // Minimal generators of a numerical semigroup are at most F + multiplicity
  // <= 2 * max(A) + 1.
  const Nat limit = 2 * top + 1;
  std::vector<Nat> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Nat> comp;
  for (Nat n = 1; n <= limit; ++n) {
    if (!std::binary_search(sorted.begin(), sorted.end(), n)) comp.push_back(n);
  }
  return minimal_generators(comp);
}

PrimeSubset PrimeSubset::finite(std::vector<Nat> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const auto check = is_prime_subset(elements);
  if (!check.prime) throw NotPrimeSubset(*check.violation);
  return PrimeSubset(Finite{std::move(elements)});
}

PrimeSubset PrimeSubset::cofinite(Nat d, NumericalSemigroup s) {
  if (d < 2) throw PreconditionError("cofinite prime subsets need d >= 2");
  return PrimeSubset(Cofinite{d, std::move(s)});
}

PrimeSubset PrimeSubset::from_prefix(std::span<const Nat> prefix, Nat bound) {
  std::vector<Nat> a(prefix.begin(), prefix.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (!a.empty() && a.back() > bound) throw PreconditionError("prefix element exceeds bound");
  const auto check = is_prime_subset(a);
  if (!check.prime) throw NotPrimeSubset(*check.violation);

  std::vector<Nat> comp;
  for (Nat n = 1; n <= bound; ++n) {
    if (!std::binary_search(a.begin(), a.end(), n)) comp.push_back(n);
  }
  if (comp.empty()) throw PreconditionError("prefix covers [1, bound]; raise the bound");
  const auto gens = minimal_generators(comp);
  const Nat d = gcd_all(gens);
  if (d == 1) return finite(std::move(a));

  std::vector<Nat> sgens;
  for (Nat g : gens) sgens.push_back(g / d);
  PrimeSubset out = cofinite(d, NumericalSemigroup::from_generators(std::move(sgens)));
  if (out.elements_up_to(bound) != a) {
    throw PreconditionError("prefix has no consistent d > 1 reading at this bound");
  }
  return out;
}

bool PrimeSubset::contains(std::uint64_t a) const {
  if (a == 0) return false;
  if (const auto* f = as_finite()) return sorted_contains(f->elements, a);
  const auto& c = std::get<Cofinite>(rep_);
  return !(a % c.d == 0 && c.semigroup.contains(a / c.d));
}

std::vector<Nat> PrimeSubset::elements_up_to(Nat bound) const {
  std::vector<Nat> out;
  if (const auto* f = as_finite()) {
    for (Nat e : f->elements) {
      if (e <= bound) out.push_back(e);
    }
    return out;
  }
  for (Nat n = 1; n <= bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

Nat PrimeSubset::class_d() const {
  if (const auto* c = as_cofinite()) return c->d;
  return 1;
}

ClassParams class_params(const PrimeSubset& a) {
  ClassParams p;
  if (const auto* f = a.as_finite()) {
    p.d = 1;
    p.alpha = f->elements.empty() ? 1 : f->elements.back() + 1;
    return p;
  }
  const auto& c = *a.as_cofinite();
  p.d = c.d;
  p.frobenius = c.semigroup.frobenius();
  p.big_a = (c.semigroup.frobenius() + 1) * c.d;
  p.semigroup = c.semigroup;
  return p;
}

// ---------------------------------------------------------------------------
// Text and JSON

std::vector<Nat> parse_nat_list(std::string_view text, std::size_t offset) {
  std::vector<Nat> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '{' || text[i] == '}' || text[i] == '<' ||
                               text[i] == '>')) {
      ++i;
    }
  };
  skip();
  while (i < text.size()) {
    Nat v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw ParseError("expected a natural number", offset + i);
    i = static_cast<std::size_t>(ptr - text.data());
    out.push_back(v);
    skip();
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ','", offset + i);
      ++i;
      skip();
    }
  }
  return out;
}

PrimeSubset parse_prime_subset(std::string_view text) {
  const std::size_t semi = text.find(';');
  if (text.find("d=") == std::string_view::npos) return PrimeSubset::finite(parse_nat_list(text, 0));
  if (semi == std::string_view::npos) throw ParseError("expected 'd=<n>;S=<gens>'", 0);
  const std::size_t dpos = text.find("d=");
  const auto dpart = parse_nat_list(text.substr(dpos + 2, semi - dpos - 2), dpos + 2);
  if (dpart.size() != 1) throw ParseError("expected a single value for d", dpos + 2);
  const std::size_t spos = text.find("S=", semi);
  if (spos == std::string_view::npos) throw ParseError("expected 'S='", semi + 1);
  const auto gens = parse_nat_list(text.substr(spos + 2), spos + 2);
  return PrimeSubset::cofinite(dpart[0], NumericalSemigroup::from_generators(gens));
}

std::string to_string(const PrimeSubset& a) {
  auto join = [](const std::vector<Nat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  if (const auto* f = a.as_finite()) return "{" + join(f->elements) + "}";
  const auto& c = *a.as_cofinite();
  return "d=" + std::to_string(c.d) + ";S=" + join(c.semigroup.generators());
}

void to_json(nlohmann::json& j, const PrimeSubset& a) {
  if (const auto* f = a.as_finite()) {
    j = {{"finite", f->elements}};
    return;
  }
  const auto& c = *a.as_cofinite();
  j = {{"d", c.d}, {"semigroup", c.semigroup.generators()}};
}

void from_json(const nlohmann::json& j, PrimeSubset& a) {
  if (j.contains("finite")) {
    a = PrimeSubset::finite(j.at("finite").get<std::vector<Nat>>());
    return;
  }
  a = PrimeSubset::cofinite(j.at("d").get<Nat>(),
                            NumericalSemigroup::from_generators(j.at("semigroup").get<std::vector<Nat>>()));
}

void to_json(nlohmann::json& j, const ClassParams& p) {
  j = {{"d", p.d}};
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.big_a) j["big_a"] = *p.big_a;
  if (p.frobenius) j["frobenius"] = *p.frobenius;
  if (p.semigroup) j["semigroup"] = p.semigroup->generators();
}

}  // namespace boolprime
