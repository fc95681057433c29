#include "boolprime/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace boolprime {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Poly trinomial(Exp a, Exp b) { return Poly::from_exponents({0, a, b}); }

void push_q(std::vector<Poly>& out, const std::vector<Poly>& q, Exp bound) {
  for (const auto& p : q) {
    if (p.total_degree() <= bound) out.push_back(p);
  }
}

void star_part(std::vector<Poly>& out, const PrimeSubset& A, Exp bound) {
  for (Nat a : A.elements_up_to(bound)) {
    for (Exp m = 0; m + a <= bound; ++m) out.push_back(trinomial(m, m + a));
  }
}

void finish(std::vector<Poly>& gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

void check_q(const std::vector<Poly>& q, const PrimeSubset& A) {
  for (const auto& p : q) {
    if (!p.is_univariate()) throw InvalidFamily("Q element " + to_string(p) + " is not univariate");
    if (!p.has_constant() || p.size() < 2) {
      throw InvalidFamily("Q element " + to_string(p) + " must contain 1 and another term");
    }
    const StarCheck c = property_star(p, A);
    if (!c.holds) {
      throw InvalidFamily("Q element " + to_string(p) + " fails property star clause " +
                          std::to_string(c.failed_clause.value_or(0)));
    }
  }
}

void check_nonempty(const PrimeSubset& A, const char* kind) {
  if (A.empty()) throw InvalidFamily(std::string(kind) + " needs a non-empty prime subset");
}

}  // namespace

std::size_t nvars(const FamilyDesc& desc) {
  return std::visit(overloaded{[](const family::CatIN& f) { return f.A.nvars(); },
                               [](const family::P1&) { return std::size_t{2}; },
                               [](const family::P2&) { return std::size_t{2}; },
                               [](const auto&) { return std::size_t{1}; }},
                    desc);
}

std::string kind_name(const FamilyDesc& desc) {
  return std::visit(overloaded{[](const family::CatI&) { return std::string("CatI"); },
                               [](const family::JA&) { return std::string("JA"); },
                               [](const family::StarD1&) { return std::string("StarD1"); },
                               [](const family::StarDgt1&) { return std::string("StarDgt1"); },
                               [](const family::CatIN&) { return std::string("CatIN"); },
                               [](const family::P1&) { return std::string("P1"); },
                               [](const family::P2&) { return std::string("P2"); }},
                    desc);
}

void validate(const FamilyDesc& desc) {
  std::visit(overloaded{
                 [](const family::CatI&) {},
                 [](const family::JA& f) { check_nonempty(f.A, "JA"); },
                 [](const family::StarD1& f) {
                   check_nonempty(f.A, "StarD1");
                   if (!f.A.is_finite()) throw InvalidFamily("StarD1 needs a finite prime subset (d = 1)");
                   check_q(f.Q, f.A);
                 },
                 [](const family::StarDgt1& f) {
                   const auto* c = f.A.as_cofinite();
                   if (c == nullptr) throw InvalidFamily("StarDgt1 needs an infinite prime subset (d > 1)");
                   if (!f.A.contains(c->d)) {
                     throw InvalidFamily("StarDgt1 needs d = " + std::to_string(c->d) + " in A");
                   }
                   check_q(f.Q, f.A);
                 },
                 [](const family::CatIN&) {},
                 [](const family::P1&) {},
                 [](const family::P2&) {},
             },
             desc);
}

std::vector<Poly> family_generators(const FamilyDesc& desc, Exp bound) {
  std::vector<Poly> out;
  std::visit(
      overloaded{
          [&](const family::CatI& f) {
            if (bound >= 1) out.push_back(Poly::x_pow(1));
            for (Nat a : f.A.elements_up_to(bound)) out.push_back(Poly::from_exponents({0, a}));
          },
          [&](const family::JA& f) {
            for (Nat a : f.A.elements_up_to(bound)) {
              for (Exp m = 0; m <= bound; ++m) out.push_back(trinomial(a, m));
            }
          },
          [&](const family::StarD1& f) {
            star_part(out, f.A, bound);
            push_q(out, f.Q, bound);
          },
          [&](const family::StarDgt1& f) {
            star_part(out, f.A, bound);
            const ClassParams p = class_params(f.A);
            const Nat d = p.d;
            const Nat big_a = *p.big_a;
            for (Nat a : f.A.elements_up_to(bound)) {
              if (a < d || a >= big_a || a % d != 0) {
                for (Exp m = 0; m <= bound; ++m) out.push_back(trinomial(a, m));
              }
            }
            push_q(out, f.Q, bound);
          },
          [&](const family::CatIN& f) {
            const std::size_t n = f.A.nvars();
            for (std::size_t i = 0; i < n && bound >= 1; ++i) {
              ExpVec v(n, 0);
              v[i] = 1;
              out.push_back(Poly::monomial(v));
            }
            for (const auto& a : f.A.elements()) {
              const Exp deg = std::accumulate(a.begin(), a.end(), Exp{0});
              if (deg <= bound) out.push_back(Poly::from_terms(n, {ExpVec(n, 0), a}));
            }
          },
          [&](const family::P1& f) {
            for (Exp a = 1; a <= bound; ++a) {
              for (Exp b = 1; b <= bound; ++b) {
                for (Exp c = 0; c <= bound; ++c) {
                  for (Exp d = 0; c + d <= bound; ++d) {
                    if (c + d == 0 && !f.allow_constant) continue;
                    out.push_back(Poly::from_terms(2, {{a, 0}, {0, b}, {c, d}}));
                  }
                }
              }
            }
          },
          [&](const family::P2&) {
            for (Exp a = 1; a <= bound; ++a) {
              for (Exp b = 1; b <= bound; ++b) out.push_back(Poly::from_terms(2, {{a, 0}, {0, b}}));
            }
            // 1 + x^i y^q + x^p y^j with 0 <= i < p, 0 <= j < q.
            for (Exp p = 1; p <= bound; ++p) {
              for (Exp q = 1; q <= bound; ++q) {
                for (Exp i = 0; i < p && i + q <= bound; ++i) {
                  for (Exp j = 0; j < q && p + j <= bound; ++j) {
                    out.push_back(Poly::from_terms(2, {{0, 0}, {i, q}, {p, j}}));
                  }
                }
              }
            }
          },
      },
      desc);
  finish(out);
  return out;
}

StarCheck property_star(const Poly& f, const PrimeSubset& A, StarReading reading) {
  if (!f.is_univariate()) throw PreconditionError("property star is defined for univariate polynomials");
  if (!f.has_constant()) throw PreconditionError("property star needs 1 in the support");
  if (f.size() < 2) throw PreconditionError("property star needs at least one non-constant term");
  const auto sup = f.support();
  const std::vector<Exp> m(sup.begin() + 1, sup.end());
  StarCheck r;
  for (Exp e : m) {
    if (A.contains(e)) {
      r.failed_clause = 1;
      return r;
    }
  }
  bool diff = false;
  for (std::size_t i = 0; i < m.size() && !diff; ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (A.contains(m[j] - m[i])) {
        diff = true;
        break;
      }
    }
  }
  if (!diff) {
    r.failed_clause = 2;
    return r;
  }
  std::vector<Exp> pool = m;
  if (reading == StarReading::IncludeConstant) pool.insert(pool.begin(), 0);
  for (std::size_t t = 0; t < pool.size(); ++t) {
    bool ok = true;
    for (std::size_t j = 0; j < pool.size() && ok; ++j) {
      if (j == t) continue;
      const Exp dist = pool[t] > pool[j] ? pool[t] - pool[j] : pool[j] - pool[t];
      if (A.contains(dist)) ok = false;
    }
    if (ok) {
      r.holds = true;
      return r;
    }
  }
  r.failed_clause = 3;
  return r;
}

FamilyDesc star_base(const FamilyDesc& desc) {
  if (const auto* s = std::get_if<family::StarD1>(&desc)) return family::StarD1{s->A, {}};
  if (const auto* s = std::get_if<family::StarDgt1>(&desc)) return family::StarDgt1{s->A, {}};
  return desc;
}

namespace family {

void to_json(nlohmann::json& j, const FamilyDesc& desc) {
  j = nlohmann::json{{"kind", kind_name(desc)}};
  auto q_json = [](const std::vector<Poly>& q) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : q) arr.push_back(to_string(p));
    return arr;
  };
  std::visit(overloaded{[&](const family::CatI& f) { j["A"] = f.A; },
                        [&](const family::JA& f) { j["A"] = f.A; },
                        [&](const family::StarD1& f) {
                          j["A"] = f.A;
                          j["Q"] = q_json(f.Q);
                        },
                        [&](const family::StarDgt1& f) {
                          j["A"] = f.A;
                          j["Q"] = q_json(f.Q);
                        },
                        [&](const family::CatIN& f) { j["A"] = f.A; },
                        [&](const family::P1& f) { j["allow_constant"] = f.allow_constant; },
                        [](const family::P2&) {}},
             desc);
}

void from_json(const nlohmann::json& j, FamilyDesc& desc) {
  const std::string kind = j.at("kind").get<std::string>();
  auto q_from = [&]() {
    std::vector<Poly> q;
    if (j.contains("Q")) {
      for (const auto& e : j.at("Q")) q.push_back(e.is_string() ? parse_poly(e.get<std::string>()) : e.get<Poly>());
    }
    return q;
  };
  if (kind == "CatI") {
    desc = family::CatI{j.at("A").get<PrimeSubset>()};
  } else if (kind == "JA") {
    desc = family::JA{j.at("A").get<PrimeSubset>()};
  } else if (kind == "StarD1") {
    desc = family::StarD1{j.at("A").get<PrimeSubset>(), q_from()};
  } else if (kind == "StarDgt1") {
    desc = family::StarDgt1{j.at("A").get<PrimeSubset>(), q_from()};
  } else if (kind == "CatIN") {
    desc = family::CatIN{j.at("A").get<PrimeSubsetN>()};
  } else if (kind == "P1") {
    desc = family::P1{j.value("allow_constant", false)};
  } else if (kind == "P2") {
    desc = family::P2{};
  } else {
    throw Error("unknown family kind '" + kind + "'");
  }
  validate(desc);
}

}  // namespace family

}  // namespace boolprime
