#include "boolprime/identities.hpp"

#include <random>

#include "boolprime/errors.hpp"

namespace boolprime {
namespace {

Poly one() { return Poly::one(); }
Poly xp(std::uint64_t k) { return Poly::x_pow(static_cast<Exp>(k)); }
Poly binom(std::uint64_t k) { return Poly::from_exponents({0, static_cast<Exp>(k)}); }

// x^lo + x^(lo+1) + ... + x^hi; zero when hi < lo.
Poly run(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Exp> e;
  for (std::uint64_t i = lo; i <= hi; ++i) e.push_back(static_cast<Exp>(i));
  return Poly::from_exponents(std::move(e));
}

Poly mono2(Exp i, Exp j) { return Poly::from_terms(2, {{i, j}}); }

IdentityForm form(std::string name, const Poly& lhs, const Poly& rhs, bool required = true) {
  IdentityForm f;
  f.name = std::move(name);
  f.lhs = lhs;
  f.rhs = rhs;
  f.equal = lhs == rhs;
  f.difference = symmetric_difference(lhs, rhs);
  f.required = required;
  return f;
}

IdentityCheckResult finish(std::string id, nlohmann::json params, std::vector<IdentityForm> forms) {
  IdentityCheckResult r;
  r.identity = std::move(id);
  r.params = std::move(params);
  r.lhs = forms.front().lhs;
  r.rhs = forms.front().rhs;
  r.symmetric_difference = forms.front().difference;
  r.equal = true;
  for (const auto& f : forms) {
    if (f.required && !f.equal) r.equal = false;
  }
  r.forms = std::move(forms);
  return r;
}

// (1+x^alpha)^m prod_{i=1}^{alpha-1} (1+x^(alpha+i)).
Poly base_product(std::uint64_t alpha, std::uint64_t m) {
  Poly p = pow(binom(alpha), m);
  for (std::uint64_t i = 1; i < alpha; ++i) p = p * binom(alpha + i);
  return p;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

std::uint64_t q_closed_form(std::uint64_t alpha, std::uint64_t m) { return alpha * (2 * m + 3 * alpha - 3) / 2; }

std::uint64_t q_definitional(std::uint64_t alpha, std::uint64_t m) {
  std::uint64_t q = m * alpha;
  for (std::uint64_t i = 1; i < alpha; ++i) q += alpha + i;
  return q;
}

IdentityCheckResult check_eq_product(Exp r, Exp s) {
  require(1 <= r && r <= s, "eq_product needs 1 <= r <= s");
  const Poly lhs = pow(binom(r), s) * pow(binom(s), s) * binom(r + s);
  const Poly rhs = pow(binom(r), s + 1) * pow(binom(s), s + 1);
  return finish("eq_product", {{"r", r}, {"s", s}, {"a", r + s}}, {form("product", lhs, rhs)});
}

IdentityCheckResult check_three_term(const Poly& a, const Poly& b, const Poly& c) {
  const Poly lhs = (a + b + c) * (a * c + b * c + a * b);
  const Poly rhs = (a + b) * (b + c) * (a + c);
  return finish("three_term", {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"nvars", a.nvars()}},
                {form("product", lhs, rhs)});
}

IdentityCheckResult check_product_rule1(Exp alpha, Exp m) {
  require(alpha >= 2 && m >= 1 && m - 1 > alpha, "product_rule1 needs m - 1 > alpha >= 2");
  const std::uint64_t q = q_closed_form(alpha, m);
  const Poly lhs = base_product(alpha, m);
  const Poly intermediate = one() + run(alpha, q - alpha) + xp(q);
  const Poly grouped = Poly::from_exponents({0, m - 1, m}) + xp(alpha) * pow(binom(1), q - 2 * alpha) +
                       Poly::from_exponents({0, 1, m - 1}) * xp(q - m + 1);
  auto r = finish("product_rule1", {{"alpha", alpha}, {"m", m}},
                  {form("intermediate", lhs, intermediate), form("grouped", lhs, grouped)});
  r.q = q;
  if (q_definitional(alpha, m) != q) r.equal = false;
  return r;
}

IdentityCheckResult check_product_rule2(const PrimeSubset& A, Exp a, Exp m) {
  const auto* fin = A.as_finite();
  require(fin != nullptr && !fin->elements.empty(), "product_rule2 needs a finite non-empty A");
  require(A.contains(a), "product_rule2 needs a in A");
  const std::uint64_t alpha = fin->elements.back() + 1;
  require(alpha <= m && m < alpha + a, "product_rule2 needs alpha <= m < alpha + a");
  const std::uint64_t q = q_closed_form(alpha, m);
  const std::uint64_t ma = m - a;
  const Poly lhs = binom(ma) * base_product(alpha, m);
  const Poly intermediate =
      Poly::from_exponents({0, static_cast<Exp>(ma), m}) + run(alpha, q - alpha + ma) + xp(q) + xp(q + ma);
  const Poly grouped = Poly::from_exponents({0, static_cast<Exp>(ma), m}) +
                       xp(alpha) * pow(binom(1), q - 2 * alpha + ma) +
                       Poly::from_exponents({0, a, static_cast<Exp>(q - alpha)}) * xp(alpha) +
                       Poly::from_exponents({0, a, static_cast<Exp>(q + ma - alpha)}) * xp(alpha);
  auto r = finish("product_rule2", {{"A", A}, {"alpha", alpha}, {"a", a}, {"m", m}},
                  {form("intermediate", lhs, intermediate), form("grouped", lhs, grouped, false)});
  r.q = q;
  if (q_definitional(alpha, m) != q) r.equal = false;
  return r;
}

IdentityCheckResult check_product_rule3(Exp alpha, Exp a, Exp m) {
  require(a >= 1 && a < m && m < alpha, "product_rule3 needs 1 <= a < m < alpha");
  std::uint64_t k = 1;
  while (k * m < alpha + static_cast<std::uint64_t>(a)) ++k;
  const std::uint64_t q = q_closed_form(alpha, m);
  const Poly lhs = binom(m - a) * pow(binom(m), k - 1) * base_product(alpha, m);

  Poly intermediate = one() + run(alpha, q - alpha + k * m - a);
  for (std::uint64_t i = 0; i < k; ++i) {
    intermediate = intermediate + xp(i * m) + xp((i + 1) * m - a) + xp(q + i * m) + xp(q + (i + 1) * m - a);
  }
  Poly sum;
  for (std::uint64_t i = 1; i < k; ++i) sum = sum + xp(i * m - a) + xp(q + i * m - a);
  const Poly grouped = Poly::from_exponents({0, m - a, m}) + xp(alpha) * pow(binom(1), q - 2 * alpha + k * m - a) +
                       binom(a) * sum +
                       Poly::from_exponents({0, a, static_cast<Exp>(a + alpha)}) * xp(q - alpha + k * m - 2 * a);
  auto r = finish("product_rule3", {{"alpha", alpha}, {"a", a}, {"m", m}, {"k", k}},
                  {form("intermediate", lhs, intermediate), form("grouped", lhs, grouped, false)});
  r.q = q;
  r.k = k;
  if (q_definitional(alpha, m) != q) r.equal = false;
  return r;
}

IdentityCheckResult check_product_rule4(Exp alpha, Exp m) {
  auto r = check_product_rule3(alpha, 1, m);
  r.identity = "product_rule4";
  r.params = {{"alpha", alpha}, {"m", m}, {"k", *r.k}};
  return r;
}

IdentityCheckResult check_multivar_identities(Exp a, Exp b, Exp p, Exp q, const Poly& f) {
  require(a >= 1 && b >= 1, "multivariate identities need a, b >= 1");
  if (f.nvars() != 2) throw VariableMismatch(2, f.nvars());
  const Poly xa = mono2(a, 0);
  const Poly yb = mono2(0, b);
  const Poly xpyq = mono2(p, q);
  const Poly xayb = mono2(a, b);
  const Poly lhs1 = (xa + yb + xpyq) * (xayb + mono2(p + a, q) + mono2(p, q + b));
  const Poly rhs1 = (xa + yb) * (xa + xpyq) * (yb + xpyq);
  const Poly u = Poly::one(2);
  const Poly lhs2 = (u + xayb + f) * (xayb + f + xayb * f);
  const Poly rhs2 = (u + xayb) * (u + f) * (xayb + f);
  return finish("multivar", {{"a", a}, {"b", b}, {"p", p}, {"q", q}, {"f", to_string(f)}},
                {form("binomial", lhs1, rhs1), form("unit", lhs2, rhs2)});
}

std::vector<IdentityCheckResult> sweep_eq_product(Exp max_s) {
  std::vector<IdentityCheckResult> out;
  for (Exp s = 1; s <= max_s; ++s) {
    for (Exp r = 1; r <= s; ++r) out.push_back(check_eq_product(r, s));
  }
  return out;
}

std::vector<IdentityCheckResult> sweep_product_rule1() {
  std::vector<IdentityCheckResult> out;
  for (Exp alpha = 2; alpha <= 4; ++alpha) {
    for (Exp m = alpha + 2; m <= alpha + 5; ++m) out.push_back(check_product_rule1(alpha, m));
  }
  return out;
}

std::vector<IdentityCheckResult> sweep_product_rule2(Nat max_elem) {
  std::vector<IdentityCheckResult> out;
  for (std::uint32_t mask = 1; mask < (1U << max_elem); ++mask) {
    std::vector<Nat> elems;
    for (Nat i = 1; i <= max_elem; ++i) {
      if ((mask >> (i - 1)) & 1U) elems.push_back(i);
    }
    if (!is_prime_subset(elems).prime) continue;
    const PrimeSubset A = PrimeSubset::finite(elems);
    const Exp alpha = elems.back() + 1;
    for (Nat a : elems) {
      for (Exp m = alpha; m < alpha + a; ++m) out.push_back(check_product_rule2(A, a, m));
    }
  }
  return out;
}

std::vector<IdentityCheckResult> sweep_product_rule3(Exp max_alpha) {
  std::vector<IdentityCheckResult> out;
  for (Exp alpha = 3; alpha <= max_alpha; ++alpha) {
    for (Exp m = 2; m < alpha; ++m) {
      for (Exp a = 1; a < m; ++a) out.push_back(check_product_rule3(alpha, a, m));
    }
  }
  return out;
}

std::vector<IdentityCheckResult> sweep_product_rule4(Exp max_alpha) {
  std::vector<IdentityCheckResult> out;
  for (Exp alpha = 3; alpha <= max_alpha; ++alpha) {
    for (Exp m = 2; m < alpha; ++m) out.push_back(check_product_rule4(alpha, m));
  }
  return out;
}

namespace {

Poly random_univariate(std::mt19937_64& rng, Exp max_exp) {
  std::vector<Exp> e;
  const std::uint64_t bits = rng();
  for (Exp i = 0; i <= max_exp; ++i) {
    if ((bits >> i) & 1U) e.push_back(i);
  }
  return Poly::from_exponents(std::move(e));
}

}  // namespace

std::vector<IdentityCheckResult> sweep_three_term(std::size_t trials, Exp max_exp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<IdentityCheckResult> out;
  for (std::size_t t = 0; t < trials; ++t) {
    const Poly a = random_univariate(rng, max_exp);
    const Poly b = random_univariate(rng, max_exp);
    const Poly c = random_univariate(rng, max_exp);
    out.push_back(check_three_term(a, b, c));
  }
  return out;
}

std::vector<IdentityCheckResult> sweep_multivar(std::size_t random_fs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> fs{Poly::zero(2)};
  for (std::size_t i = 0; i < random_fs; ++i) {
    std::vector<std::vector<Exp>> terms;
    const std::uint64_t bits = rng();
    for (Exp x = 0; x <= 2; ++x) {
      for (Exp y = 0; y <= 2; ++y) {
        if ((bits >> (3 * x + y)) & 1U) terms.push_back({x, y});
      }
    }
    fs.push_back(Poly::from_terms(2, terms));
  }
  std::vector<IdentityCheckResult> out;
  for (Exp a = 1; a <= 3; ++a) {
    for (Exp b = 1; b <= 3; ++b) {
      for (Exp p = 0; p <= 3; ++p) {
        for (Exp q = 0; q <= 3; ++q) {
          for (const auto& f : fs) out.push_back(check_multivar_identities(a, b, p, q, f));
        }
      }
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const IdentityCheckResult& r) {
  nlohmann::json forms = nlohmann::json::array();
  for (const auto& f : r.forms) {
    forms.push_back({{"name", f.name},
                     {"lhs", to_string(f.lhs)},
                     {"rhs", to_string(f.rhs)},
                     {"equal", f.equal},
                     {"diff", to_string(f.difference)},
                     {"required", f.required}});
  }
  j = nlohmann::json{{"identity", r.identity},
                     {"params", r.params},
                     {"nvars", r.lhs.nvars()},
                     {"equal", r.equal},
                     {"diff", to_string(r.symmetric_difference)},
                     {"forms", forms}};
  j["q"] = r.q ? nlohmann::json(*r.q) : nlohmann::json(nullptr);
  j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, IdentityCheckResult& r) {
  r = IdentityCheckResult{};
  const std::size_t n = j.at("nvars").get<std::size_t>();
  r.identity = j.at("identity").get<std::string>();
  r.params = j.at("params");
  r.equal = j.at("equal").get<bool>();
  for (const auto& f : j.at("forms")) {
    IdentityForm x;
    x.name = f.at("name").get<std::string>();
    x.lhs = parse_poly(f.at("lhs").get<std::string>(), n);
    x.rhs = parse_poly(f.at("rhs").get<std::string>(), n);
    x.equal = f.at("equal").get<bool>();
    x.difference = parse_poly(f.at("diff").get<std::string>(), n);
    x.required = f.at("required").get<bool>();
    r.forms.push_back(std::move(x));
  }
  if (r.forms.empty()) throw Error("identity result without forms");
  r.lhs = r.forms.front().lhs;
  r.rhs = r.forms.front().rhs;
  r.symmetric_difference = r.forms.front().difference;
  if (!j.at("q").is_null()) r.q = j.at("q").get<std::uint64_t>();
  if (!j.at("k").is_null()) r.k = j.at("k").get<std::uint64_t>();
}

}  // namespace boolprime
