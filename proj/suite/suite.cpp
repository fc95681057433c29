#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "boolprime/classify.hpp"
#include "boolprime/identities.hpp"
#include "boolprime/ideals.hpp"
#include "boolprime/multivar.hpp"
#include "boolprime/subsets.hpp"
#include "oracles.hpp"

namespace boolprime::suite {
namespace {

using nlohmann::json;

Poly P(std::string_view s, std::size_t n = 1) { return parse_poly(s, n); }

Poly from_mask(std::uint64_t mask) {
  std::vector<Exp> e;
  for (Exp i = 0; i < 64; ++i) {
    if ((mask >> i) & 1U) e.push_back(i);
  }
  return Poly::from_exponents(e);
}

std::uint64_t to_mask(const Poly& f) {
  std::uint64_t m = 0;
  for (Exp e : f.support()) m |= std::uint64_t{1} << e;
  return m;
}

struct Ctx {
  CriterionResult& r;
  std::size_t checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && r.failures.size() < 20) r.failures.push_back(what);
    if (!ok) r.passed = false;
  }
};

std::string join(const std::vector<Nat>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string vec_str(const ExpVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void c1_low_degree_identities(CriterionResult& r, const SuiteOptions&) {
  Ctx c{r};
  const Poly lhs1 = P("1+x+x^3") * P("1+x^2+x^3");
  c.expect(lhs1 == P("1+x") * P("1+x^2") * P("1+x^3"), "(1+x+x^3)(1+x^2+x^3) != (1+x)(1+x^2)(1+x^3)");
  const Poly lhs2 = P("1+x^2+x^3") * P("1+x+x^3");
  c.expect(lhs2 == pow(P("1+x"), 6), "(1+x^2+x^3)(1+x+x^3) != (1+x)^6");
  c.expect(lhs1 == oracle::mul(P("1+x+x^3"), P("1+x^2+x^3")), "product disagrees with term-by-term oracle");
  std::size_t instances = 0;
  for (Exp N = 0; N <= 8; ++N) {
    const Poly unit = pow(P("1+x"), N);
    const Poly target = pow(P("1+x"), 2 * N);
    const std::uint64_t inner = N >= 2 ? (std::uint64_t{1} << (N - 1)) : 1;
    for (std::uint64_t mid = 0; mid < inner; ++mid) {
      std::uint64_t mask = 1;
      if (N >= 1) mask |= (std::uint64_t{1} << N) | (mid << 1);
      const Poly f = from_mask(mask);
      const Poly prod = f * unit;
      c.expect(prod == target, to_string(f) + " * (1+x)^" + std::to_string(N) + " != (1+x)^" + std::to_string(2 * N));
      c.expect(prod == oracle::mul(f, unit), "oracle product mismatch for " + to_string(f));
      ++instances;
    }
  }
  r.data["unit_instances"] = instances;
  r.summary = "2 named identities, " + std::to_string(instances) + " instances f*(1+x)^N, N <= 8";
}

void c2_eq_product(CriterionResult& r, const SuiteOptions&) {
  Ctx c{r};
  const auto res = sweep_eq_product(6);
  for (const auto& x : res) c.expect(x.equal, "eq_product fails at " + x.params.dump());
  c.expect(res.size() == 21, "expected 21 pairs 1 <= r <= s <= 6, got " + std::to_string(res.size()));
  r.summary = std::to_string(res.size()) + " pairs (r, s) exact";
}

void c3_product_rules(CriterionResult& r, const SuiteOptions&) {
  Ctx c{r};
  const auto r1 = sweep_product_rule1();
  for (const auto& x : r1) {
    c.expect(x.equal, "product_rule1 fails at " + x.params.dump());
    const auto alpha = x.params.at("alpha").get<std::uint64_t>();
    const auto m = x.params.at("m").get<std::uint64_t>();
    c.expect(x.q && *x.q == q_closed_form(alpha, m) && *x.q == q_definitional(alpha, m),
             "q mismatch at " + x.params.dump());
  }
  c.expect(r1.size() == 12, "expected 12 rule-1 instances");
  json grouped_mismatch = json::array();
  std::size_t report_instances = 0;
  auto report_mode = [&](const std::vector<IdentityCheckResult>& rs) {
    for (const auto& x : rs) {
      ++report_instances;
      for (const auto& f : x.forms) {
        if (f.required) {
          c.expect(f.equal, x.identity + " " + f.name + " form fails at " + x.params.dump());
        } else if (!f.equal) {
          grouped_mismatch.push_back({{"identity", x.identity}, {"params", x.params}, {"form", f.name},
                                      {"symmetric_difference", to_string(f.difference)}});
        }
      }
    }
  };
  report_mode(sweep_product_rule2(6));
  report_mode(sweep_product_rule3(7));
  report_mode(sweep_product_rule4(8));
  r.data["grouped_mismatches"] = grouped_mismatch;
  r.summary = std::to_string(r1.size()) + " rule-1 instances with q; " + std::to_string(report_instances) +
              " rule-2/3/4 instances in report mode, " + std::to_string(grouped_mismatch.size()) +
              " grouped-form mismatches listed";
}

void c4_leading_pair_battery(CriterionResult& r, const SuiteOptions& o) {
  Ctx c{r};
  const PrimeSubset one = PrimeSubset::finite({1});
  const IdealSpec star = IdealSpec::family(family::StarD1{one, {}});
  const IdealSpec ja = IdealSpec::family(family::JA{one});
  const EqualityReport eq = equal_up_to(star, IdealSpec::leading_pair(), 7);
  c.expect(eq.equal, "StarD1({1}) differs from the leading-pair characterization up to degree 7");
  const PrimalityReport pr = primality_search(star, 7, o.workers);
  c.expect(pr.prime_up_to_bound(), "primality search found a counterexample at D = 7");
  const auto A = extract_A(star, 14);
  c.expect(A == std::vector<Nat>{1}, "extract_A = " + join(A) + ", expected {1}");
  const Poly w = P("1+x^2+x^3");
  const MembershipVerdict v = member(w, star);
  c.expect(v.is_member, "1+x^2+x^3 is not in StarD1({1})");
  c.expect(!member(w, ja).is_member, "1+x^2+x^3 lies in J_{1}");
  r.data["nonmembers"] = pr.nonmembers;
  r.data["pairs_checked"] = pr.pairs_checked;
  r.data["witness_cover"] = verdict_to_json(v, 1);
  r.summary = "StarD1({1}) = leading-pair ideal to degree 7, prime to D = 7 (" + std::to_string(pr.nonmembers) +
              " non-members), A = {1}, 1+x^2+x^3 in it but not in J_{1}";
}

IdealSpec cat_i_explicit(const std::vector<Nat>& A) {
  std::vector<Poly> g{Poly::x_pow(1)};
  for (Nat a : A) g.push_back(Poly::from_exponents({0, a}));
  return IdealSpec::explicit_ideal(g, 1);
}

void c5_cat_i_primality(CriterionResult& r, const SuiteOptions& o) {
  Ctx c{r};
  std::size_t prime_count = 0;
  json rows = json::array();
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::vector<Nat> A;
    for (Nat a = 1; a <= 5; ++a) {
      if ((mask >> (a - 1)) & 1U) A.push_back(a);
    }
    const bool subset_prime = is_prime_subset(A).prime;
    c.expect(subset_prime == oracle::complement_closed(A, 5), "subset check disagrees with oracle on " + join(A));
    const PrimalityReport pr = primality_search(cat_i_explicit(A), 6, o.workers);
    c.expect(pr.prime_up_to_bound() == subset_prime,
             join(A) + ": search " + (pr.prime_up_to_bound() ? "prime" : "counterexample") + ", subset " +
                 (subset_prime ? "prime" : "not prime"));
    if (subset_prime) ++prime_count;
    json row = {{"A", A}, {"subset_prime", subset_prime}, {"search_prime", pr.prime_up_to_bound()}};
    if (pr.counterexample) {
      row["f"] = to_string(pr.counterexample->f);
      row["g"] = to_string(pr.counterexample->g);
    }
    rows.push_back(row);
  }
  r.data["cases"] = rows;
  r.summary = "31 subsets of {1..5}: " + std::to_string(prime_count) + " prime, search agrees at D = 6";
}

void c6_frobenius(CriterionResult& r, const SuiteOptions&) {
  Ctx c{r};
  std::size_t pairs = 0;
  for (Nat p = 2; p <= 12; ++p) {
    for (Nat q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const std::vector<Nat> g{p, q};
      const Nat got = frobenius(g);
      const auto want = oracle::frobenius({p, q});
      c.expect(static_cast<std::int64_t>(got) == want, "frobenius(" + std::to_string(p) + "," + std::to_string(q) +
                                                           ") = " + std::to_string(got) + ", oracle " +
                                                           std::to_string(want));
      ++pairs;
    }
  }
  const std::vector<Nat> g35{3, 5};
  const std::vector<Nat> g34{3, 4};
  c.expect(frobenius(g35) == 7, "frobenius(3,5) != 7");
  c.expect(frobenius(g34) == 5, "frobenius(3,4) != 5");
  r.summary = std::to_string(pairs) + " coprime pairs <= 12 match the scan; <3,5> -> 7, <3,4> -> 5";
}

void c7_classification(CriterionResult& r, const SuiteOptions& o) {
  Ctx c{r};
  json rows = json::array();
  for (const auto& fx : classify_fixtures()) {
    const IdealSpec spec = build_family(fx.desc);
    try {
      const ClassificationReport rep = classify(spec, fx.bound, o.workers);
      const PrimeSubset* want_a = nullptr;
      std::visit([&](const auto& d) {
        if constexpr (requires { d.A; }) {
          if constexpr (std::is_same_v<std::decay_t<decltype(d.A)>, PrimeSubset>) want_a = &d.A;
        }
      }, fx.desc);
      c.expect(to_string(rep.category) == fx.category, fx.label + ": category " + to_string(rep.category));
      c.expect(to_string(rep.branch) == fx.branch, fx.label + ": branch " + to_string(rep.branch));
      c.expect(want_a != nullptr && rep.A == *want_a, fx.label + ": A = " + to_string(rep.A));
      c.expect(want_a != nullptr && rep.d == want_a->class_d(), fx.label + ": d = " + std::to_string(rep.d));
      c.expect(rep.Q == reduced_q(fx.desc, fx.bound), fx.label + ": recovered Q differs from the reduced fixture Q");
      c.expect(rep.reconstruction_equal, fx.label + ": rebuilt family differs up to the bound");
      json row = {{"fixture", fx.label}, {"category", to_string(rep.category)}, {"A", to_string(rep.A)},
                  {"d", rep.d}, {"branch", to_string(rep.branch)}, {"bound", fx.bound}, {"reconstruction_equal", rep.reconstruction_equal}};
      if (!rep.evidence.empty()) row["witness"] = to_string(rep.evidence.back().poly);
      rows.push_back(row);
    } catch (const Error& e) {
      c.expect(false, fx.label + ": " + e.what());
    }
  }
  r.data["fixtures"] = rows;
  r.summary = std::to_string(rows.size()) + " fixtures recover category, A, d, branch (D = 6 for d = 1, 12 for d > 1)";
}

void c8_extracted_subsets(CriterionResult& r, const SuiteOptions& o) {
  Ctx c{r};
  std::vector<std::pair<std::string, IdealSpec>> cands;
  for (const auto& fx : classify_fixtures()) cands.emplace_back(fx.label, build_family(fx.desc));
  for (unsigned mask = 1; mask < 32; ++mask) {
    std::vector<Nat> A;
    for (Nat a = 1; a <= 5; ++a) {
      if ((mask >> (a - 1)) & 1U) A.push_back(a);
    }
    cands.emplace_back("<x, 1+x^a : a in " + join(A) + ">", cat_i_explicit(A));
  }
  cands.emplace_back("<x>", IdealSpec::explicit_ideal({P("x")}, 1));
  cands.emplace_back("<1+x>", IdealSpec::explicit_ideal({P("1+x")}, 1));
  cands.emplace_back("<1+x+x^2>", IdealSpec::explicit_ideal({P("1+x+x^2")}, 1));
  cands.emplace_back("<x^2, 1+x+x^2>", IdealSpec::explicit_ideal({P("x^2"), P("1+x+x^2")}, 1));
  cands.emplace_back("leading-pair", IdealSpec::leading_pair());
  cands.emplace_back("J_{1} by set difference", IdealSpec::ja_set_difference(PrimeSubset::finite({1})));
  std::size_t passing = 0;
  json rows = json::array();
  for (const auto& [name, spec] : cands) {
    const PrimalityReport pr = primality_search(spec, 6, o.workers);
    if (!pr.prime_up_to_bound()) {
      rows.push_back({{"ideal", name}, {"evidence", false}});
      continue;
    }
    ++passing;
    const auto A = extract_A(spec, 12);
    const bool prime = is_prime_subset(A).prime;
    c.expect(prime, name + ": extracted A = " + join(A) + " is not prime");
    c.expect(prime == oracle::complement_closed(A, 12), name + ": oracle disagrees on " + join(A));
    rows.push_back({{"ideal", name}, {"evidence", true}, {"A_to_12", A}, {"prime", prime}});
  }
  r.data["ideals"] = rows;
  r.summary = std::to_string(passing) + " of " + std::to_string(cands.size()) +
              " ideals pass the search at D = 6; each extracted A (to 12) is prime";
}

void c9_multivariate(CriterionResult& r, const SuiteOptions& o) {
  Ctx c{r};
  std::vector<ExpVec> box;
  for (Exp i = 0; i <= 2; ++i) {
    for (Exp j = 0; j <= 2; ++j) {
      if (i + j > 0) box.push_back({i, j});
    }
  }
  std::vector<std::vector<ExpVec>> subsets{{}};
  for (std::size_t i = 0; i < box.size(); ++i) {
    subsets.push_back({box[i]});
    for (std::size_t k = i + 1; k < box.size(); ++k) subsets.push_back({box[i], box[k]});
  }
  std::size_t primes = 0;
  json rows = json::array();
  for (const auto& elems : subsets) {
    const PrimeSubsetN A(2, elems);
    const bool subset_prime = is_prime_subset_n(A).prime;
    const PrimalityReport pr = primality_search_n(build_IA_n(A), 3, o.workers);
    c.expect(pr.prime_up_to_bound() == subset_prime, to_string(A) + ": search and subset check disagree");
    if (subset_prime) {
      ++primes;
      const PrimeSubsetN back = extract_A_n_subset(build_IA_n(A), 2);
      c.expect(back == A, to_string(A) + ": extracted " + to_string(back));
    }
    rows.push_back({{"A", to_string(A)}, {"subset_prime", subset_prime}, {"search_prime", pr.prime_up_to_bound()}});
  }
  c.expect(subsets.size() == 37, "expected 37 subsets");
  r.data["subsets"] = rows;

  const IdealSpec p1 = build_P1();
  const IdealSpec p2 = build_P2();
  const PrimalityReport r1 = primality_search_n(p1, 4, o.workers);
  const PrimalityReport r2 = primality_search_n(p2, 4, o.workers);
  c.expect(r1.prime_up_to_bound(), "P1 fails the search at total degree 4");
  c.expect(r2.prime_up_to_bound(), "P2 fails the search at total degree 4");
  const auto a1 = extract_A_n(p1, 4);
  const auto a2 = extract_A_n(p2, 4);
  c.expect(a1.empty(), "P1 has non-empty A, first " + (a1.empty() ? std::string() : vec_str(a1.front())));
  c.expect(a2.empty(), "P2 has non-empty A, first " + (a2.empty() ? std::string() : vec_str(a2.front())));
  const EqualityReport eq = equal_up_to(p1, p2, 4);
  c.expect(!eq.equal, "no polynomial separates P1 and P2 up to degree 4");
  std::string sep;
  if (eq.only_in_first) sep = to_string(*eq.only_in_first) + " in P1 only";
  if (eq.only_in_second) sep += (sep.empty() ? "" : ", ") + to_string(*eq.only_in_second) + " in P2 only";
  r.data["P1"] = {{"nonmembers", r1.nonmembers}, {"pairs_checked", r1.pairs_checked}};
  r.data["P2"] = {{"nonmembers", r2.nonmembers}, {"pairs_checked", r2.pairs_checked}};
  r.data["separating"] = eq;
  r.summary = "37 subsets of the 2x2 box agree at degree 3 (" + std::to_string(primes) +
              " prime); P1, P2 prime at degree 4 with A empty; separated by " + sep;
}

void c10_membership_oracle(CriterionResult& r, const SuiteOptions& o) {
  Ctx c{r};
  std::mt19937_64 rng(o.seed);
  std::size_t compared = 0;
  std::size_t members = 0;
  for (int s = 0; s < 500; ++s) {
    std::vector<std::uint64_t> masks;
    std::vector<Poly> gens;
    while (masks.size() < 3) {
      const std::uint64_t m = rng() & 0x1FU;
      if (m == 0) continue;
      masks.push_back(m);
      gens.push_back(from_mask(m));
    }
    const IdealView view(IdealSpec::explicit_ideal(gens, 1), 6);
    for (std::uint64_t f = 0; f < 128; ++f) {
      const Poly pf = from_mask(f);
      const MembershipVerdict v = view.verdict(pf);
      const bool want = oracle::member(f, masks);
      ++compared;
      if (v.is_member != want) {
        c.expect(false, "spec " + std::to_string(s) + " f = " + to_string(pf) + ": cover says " +
                            (v.is_member ? "member" : "non-member"));
        continue;
      }
      if (!want || f == 0) continue;
      ++members;
      std::uint64_t uni = 0;
      bool inside = true;
      for (const auto& t : v.cover) {
        const std::uint64_t piece = to_mask(t.generator) << t.shift.at(0);
        inside = inside && (piece & ~f) == 0 && std::find(masks.begin(), masks.end(), to_mask(t.generator)) != masks.end();
        uni |= piece;
      }
      c.expect(inside && uni == f, "spec " + std::to_string(s) + " f = " + to_string(pf) + ": cover is not a witness");
    }
  }
  r.data["comparisons"] = compared;
  r.data["members"] = members;
  r.summary = "500 random specs x 128 supports in {0..6}: " + std::to_string(compared) + " verdicts match, " +
              std::to_string(members) + " covers verified";
}

struct Meta {
  const char* name;
  double limit;
  bool bounded;
  void (*run)(CriterionResult&, const SuiteOptions&);
};

const Meta kMeta[kCriterionCount] = {
    {"low-degree product identities", 1.0, false, c1_low_degree_identities},
    {"binomial power product sweep", 5.0, false, c2_eq_product},
    {"product rules with q", 5.0, false, c3_product_rules},
    {"leading-pair star ideal battery", 120.0, true, c4_leading_pair_battery},
    {"category I primality vs prime subset", 600.0, true, c5_cat_i_primality},
    {"Frobenius oracle agreement", 1.0, false, c6_frobenius},
    {"classification round-trip", 900.0, true, c7_classification},
    {"extracted A is prime", 0.0, true, c8_extracted_subsets},
    {"two-variable primes", 1200.0, true, c9_multivariate},
    {"membership oracle equivalence", 0.0, false, c10_membership_oracle},
};

}  // namespace

std::vector<ClassifyFixture> classify_fixtures() {
  using namespace family;
  const auto fin = [](std::vector<Nat> a) { return PrimeSubset::finite(std::move(a)); };
  const auto cof = [](Nat d, std::vector<Nat> s) { return PrimeSubset::cofinite(d, std::move(s)); };
  return {
      {"CatI({1})", CatI{fin({1})}, "I", "I_A"},
      {"JA({1})", JA{fin({1})}, "II", "JA"},
      {"JA({1,2})", JA{fin({1, 2})}, "II", "JA"},
      {"JA({1,2,4})", JA{fin({1, 2, 4})}, "II", "JA"},
      {"StarD1({1}, {})", StarD1{fin({1}), {}}, "II", "star"},
      {"StarD1({1}, {1+x^2+x^3})", StarD1{fin({1}), {parse_poly("1+x^2+x^3")}}, "II", "star"},
      {"StarD1({1,3}, {})", StarD1{fin({1, 3}), {}}, "II", "star"},
      {"StarD1({1,2,3}, {})", StarD1{fin({1, 2, 3}), {}}, "II", "star"},
      {"JA(d=2;S=1)", JA{cof(2, {1})}, "II", "JA", 12},
      {"JA(d=3;S=1)", JA{cof(3, {1})}, "II", "JA", 12},
      {"JA(d=2;S=2,3)", JA{cof(2, {2, 3})}, "II", "JA", 12},
      {"StarDgt1(d=2;S=2,3)", StarDgt1{cof(2, {2, 3}), {}}, "II", "star", 12},
      {"JA(d=2;S=3,4,5)", JA{cof(2, {3, 4, 5})}, "II", "JA", 12},
      {"StarDgt1(d=2;S=3,4,5)", StarDgt1{cof(2, {3, 4, 5}), {}}, "II", "star", 12},
  };
}

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("criterion id must be in 1..10");
  const Meta& m = kMeta[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = m.name;
  r.bounded = m.bounded;
  r.limit_seconds = m.limit;
  r.passed = true;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    m.run(r, opts);
  } catch (const std::exception& e) {
    r.passed = false;
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (m.limit > 0 && r.seconds >= m.limit) {
    r.passed = false;
    r.failures.push_back("time limit exceeded");
  }
  return r;
}

std::vector<CriterionResult> run_all(const SuiteOptions& opts) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) out.push_back(run_criterion(i, opts));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char t[96];
  if (r.limit_seconds > 0) {
    std::snprintf(t, sizeof t, "%.3f s / limit %.0f s", r.seconds, r.limit_seconds);
  } else {
    std::snprintf(t, sizeof t, "%.3f s", r.seconds);
  }
  std::string s = std::string(r.passed ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " + r.name + " (" + t +
                  ")" + (r.bounded ? " [bounded evidence]" : "") + ": " + r.summary;
  if (!r.passed && !r.failures.empty()) s += "; first failure: " + r.failures.front();
  return s;
}

void to_json(nlohmann::json& j, const CriterionResult& r) {
  j = {{"id", r.id},           {"name", r.name},       {"passed", r.passed},     {"bounded_evidence", r.bounded},
       {"limit_seconds", r.limit_seconds}, {"summary", r.summary}, {"failures", r.failures},
       {"data", r.data}};
}

}  // namespace boolprime::suite
