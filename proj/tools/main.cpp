// boolprime: command-line front end. Exit codes: 0 success, 1 mathematical
// negative (non-member, counterexample, unequal, not prime), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boolprime/classify.hpp"
#include "boolprime/identities.hpp"
#include "boolprime/ideals.hpp"
#include "boolprime/kernels.hpp"
#include "boolprime/multivar.hpp"
#include "boolprime/subsets.hpp"
#include "json.hpp"
#include "suite.hpp"

namespace bp = boolprime;
using nlohmann::json;

namespace {

struct Config {
  bool json = false;
  bp::Exp bound = 8;
  std::uint64_t seed = 20240607;
  unsigned workers = 0;
  std::size_t nvars = 1;
};

/// Raised for bad input text; `arg` names the flag and `text` its value.
struct InputError {
  std::string arg;
  std::string text;
  std::string message;
  std::optional<std::size_t> position;
};

template <class F>
auto parse_arg(const std::string& arg, const std::string& text, F&& f) {
  try {
    return f(text);
  } catch (const bp::ParseError& e) {
    throw InputError{arg, text, e.what(), e.position()};
  } catch (const bp::Error& e) {
    throw InputError{arg, text, e.what(), std::nullopt};
  }
}

struct SpecArgs {
  std::string gens;
  std::string family;
  std::string A;
  std::string Q;
  std::string characterization;
  std::string spec_json;
  bool allow_constant = false;

  void add(CLI::App* app, const std::string& suffix = "") {
    app->add_option("--gens" + suffix, gens, "comma-separated generators, e.g. \"1+x,x^3\"");
    app->add_option("--family" + suffix, family, "ja | star-d1 | star-dgt1 | cat-i | cat-i-n | p1 | p2");
    app->add_option("--A" + suffix, A, "prime subset: \"1,2\", \"d=2;S=2,3\", or \"(1,0);(0,1)\"");
    app->add_option("--Q" + suffix, Q, "extra star generators, comma-separated");
    app->add_option("--characterization" + suffix, characterization, "leading-pair | ja-set-difference");
    app->add_option("--spec-json" + suffix, spec_json, "ideal spec as JSON");
    app->add_flag("--allow-constant" + suffix, allow_constant, "p1: admit the generators 1 + x^a + y^b");
  }

  bp::IdealSpec build(const Config& cfg, const std::string& suffix = "") const {
    const int sources = !gens.empty() + !family.empty() + !characterization.empty() + !spec_json.empty();
    if (sources != 1) {
      throw InputError{"--gens" + suffix, "", "give exactly one of --gens, --family, --characterization, --spec-json",
                       std::nullopt};
    }
    if (!spec_json.empty()) {
      return parse_arg("--spec-json" + suffix, spec_json, [](const std::string& t) {
        try {
          bp::IdealSpec s = bp::IdealSpec::explicit_ideal({}, 1);
          from_json(json::parse(t), s);
          return s;
        } catch (const json::exception& e) {
          throw bp::Error(e.what());
        }
      });
    }
    if (!gens.empty()) {
      const auto g = parse_arg("--gens" + suffix, gens,
                               [&](const std::string& t) { return bp::parse_poly_list(t, cfg.nvars); });
      return bp::IdealSpec::explicit_ideal(g, cfg.nvars);
    }
    auto subset = [&] {
      return parse_arg("--A" + suffix, A, [](const std::string& t) { return bp::parse_prime_subset(t); });
    };
    if (!characterization.empty()) {
      if (characterization == "leading-pair") return bp::IdealSpec::leading_pair();
      if (characterization == "ja-set-difference") return bp::IdealSpec::ja_set_difference(subset());
      throw InputError{"--characterization" + suffix, characterization, "unknown characterization", std::nullopt};
    }
    auto qs = [&] {
      if (Q.empty()) return std::vector<bp::Poly>{};
      return parse_arg("--Q" + suffix, Q, [](const std::string& t) { return bp::parse_poly_list(t, 1); });
    };
    bp::FamilyDesc desc;
    if (family == "ja") {
      desc = bp::family::JA{subset()};
    } else if (family == "star-d1") {
      desc = bp::family::StarD1{subset(), qs()};
    } else if (family == "star-dgt1") {
      desc = bp::family::StarDgt1{subset(), qs()};
    } else if (family == "cat-i") {
      desc = bp::family::CatI{subset()};
    } else if (family == "cat-i-n") {
      const std::size_t n = cfg.nvars < 2 ? 2 : cfg.nvars;
      desc = bp::family::CatIN{parse_arg("--A" + suffix, A.empty() ? std::string("{}") : A,
                                         [&](const std::string& t) { return bp::parse_prime_subset_n(t, n); })};
    } else if (family == "p1") {
      desc = bp::family::P1{allow_constant};
    } else if (family == "p2") {
      desc = bp::family::P2{};
    } else {
      throw InputError{"--family" + suffix, family, "unknown family", std::nullopt};
    }
    return parse_arg("--family" + suffix, family, [&](const std::string&) { return bp::IdealSpec::family(desc); });
  }
};

bp::Poly poly_arg(const std::string& arg, const std::string& text, std::size_t nvars) {
  return parse_arg(arg, text, [&](const std::string& t) { return bp::parse_poly(t, nvars); });
}

std::string nat_join(const std::vector<bp::Nat>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

std::string cover_text(const bp::MembershipVerdict& v) {
  std::string s;
  for (const auto& t : v.cover) {
    std::string sh;
    for (std::size_t i = 0; i < t.shift.size(); ++i) sh += (i ? "," : "") + std::to_string(t.shift[i]);
    s += "\n  shift (" + sh + ") of " + to_string(t.generator);
  }
  return s;
}

std::string counterexample_text(const bp::PrimalityReport& r) {
  const auto& c = *r.counterexample;
  return "counterexample: (" + to_string(c.f) + ") * (" + to_string(c.g) + ") = " + to_string(c.product) +
         " is in the ideal, neither factor is" + cover_text(c.product_verdict);
}

std::string identity_text(const std::vector<bp::IdentityCheckResult>& rs) {
  std::ostringstream o;
  std::size_t ok = 0;
  for (const auto& r : rs) {
    if (r.equal) ++ok;
    o << (r.equal ? "equal    " : "UNEQUAL  ") << r.identity << ' ' << r.params.dump();
    if (r.q) o << " q=" << *r.q;
    if (r.k) o << " k=" << *r.k;
    for (const auto& f : r.forms) {
      if (!f.equal) o << "  [" << f.name << (f.required ? "" : ", report-only") << " differs on " << to_string(f.difference) << "]";
    }
    o << '\n';
  }
  o << ok << "/" << rs.size() << " equal";
  return o.str();
}

json identity_json(const std::vector<bp::IdentityCheckResult>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(r);
  return a;
}

bool all_equal(const std::vector<bp::IdentityCheckResult>& rs) {
  for (const auto& r : rs) {
    if (!r.equal) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for Boolean polynomial semirings B[x] and B[x1..xn]"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* b = std::getenv("BOOLPRIME_BOUND")) {
    try {
      cfg.bound = static_cast<bp::Exp>(std::stoul(b));
    } catch (const std::exception&) {
      std::cerr << "error: BOOLPRIME_BOUND is not a natural number\n";
      return 2;
    }
  }
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_option("--bound", cfg.bound, "degree bound (default $BOOLPRIME_BOUND or 8)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--workers", cfg.workers, "search threads (0 = hardware)");
  app.add_option("--nvars", cfg.nvars, "number of variables")->check(CLI::Range(1, 8));

  int code = 0;

  // poly
  auto* poly = app.add_subcommand("poly", "polynomial arithmetic");
  poly->require_subcommand(1);
  std::string pf;
  std::string pg;
  std::uint64_t pk = 0;
  for (const char* op : {"add", "mul"}) {
    auto* s = poly->add_subcommand(op, std::string(op) + " two polynomials");
    s->add_option("--f", pf)->required();
    s->add_option("--g", pg)->required();
    s->callback([&, op = std::string(op)] {
      const bp::Poly f = poly_arg("--f", pf, cfg.nvars);
      const bp::Poly g = poly_arg("--g", pg, cfg.nvars);
      const bp::Poly r = op == "add" ? f + g : f * g;
      emit(cfg, {{"op", op}, {"f", f}, {"g", g}, {"result", r}}, to_string(r));
    });
  }
  auto* ppow = poly->add_subcommand("pow", "power f^k");
  ppow->add_option("--f", pf)->required();
  ppow->add_option("--k", pk)->required();
  ppow->callback([&] {
    const bp::Poly f = poly_arg("--f", pf, cfg.nvars);
    const bp::Poly r = bp::pow(f, pk);
    emit(cfg, {{"op", "pow"}, {"f", f}, {"k", pk}, {"result", r}}, to_string(r));
  });

  // subset
  auto* subset = app.add_subcommand("subset", "prime subsets of N and numerical semigroups");
  subset->require_subcommand(1);
  std::string sA;
  std::string sgens;
  auto* scheck = subset->add_subcommand("check", "is the finite set prime");
  scheck->add_option("--A", sA, "\"1,2,5\" or \"d=2;S=2,3\"")->required();
  scheck->callback([&] {
    if (sA.find("d=") != std::string::npos) {
      const bp::PrimeSubset a = parse_arg("--A", sA, [](const std::string& t) { return bp::parse_prime_subset(t); });
      emit(cfg, {{"A", a}, {"prime", true}}, to_string(a) + " is prime");
      return;
    }
    const auto elems = parse_arg("--A", sA, [](const std::string& t) { return bp::parse_nat_list(t); });
    const bp::PrimeCheck c = bp::is_prime_subset(elems);
    json j = {{"A", elems}, {"prime", c.prime}};
    std::string t = nat_join(elems) + (c.prime ? " is prime" : " is not prime");
    if (c.violation) {
      j["violation"] = {c.violation->first, c.violation->second};
      t += ": " + std::to_string(c.violation->first) + " + " + std::to_string(c.violation->second) +
           " is in the set, neither summand is";
    }
    emit(cfg, j, t);
    if (!c.prime) code = 1;
  });
  auto* scomp = subset->add_subcommand("complement", "minimal generators of N - A");
  scomp->add_option("--A", sA)->required();
  scomp->callback([&] {
    const bp::PrimeSubset a = parse_arg("--A", sA, [](const std::string& t) { return bp::parse_prime_subset(t); });
    std::vector<bp::Nat> gens;
    if (const auto* f = a.as_finite()) {
      gens = bp::complement_generators(f->elements);
    } else {
      const auto* c = a.as_cofinite();
      for (bp::Nat s : c->semigroup.generators()) gens.push_back(s * c->d);
    }
    emit(cfg, {{"A", a}, {"complement_generators", gens}}, "N - A generated by " + nat_join(gens));
  });
  auto* sfrob = subset->add_subcommand("frobenius", "Frobenius number of <gens>");
  sfrob->add_option("--gens", sgens, "\"3,5\"")->required();
  sfrob->callback([&] {
    const auto g = parse_arg("--gens", sgens, [](const std::string& t) { return bp::parse_nat_list(t); });
    const bp::Nat f = parse_arg("--gens", sgens, [&](const std::string&) { return bp::frobenius(g); });
    emit(cfg, {{"gens", g}, {"frobenius", f}}, std::to_string(f));
  });
  auto* sparams = subset->add_subcommand("params", "class d, alpha, (F+1)d");
  sparams->add_option("--A", sA)->required();
  sparams->callback([&] {
    const bp::PrimeSubset a = parse_arg("--A", sA, [](const std::string& t) { return bp::parse_prime_subset(t); });
    const bp::ClassParams p = bp::class_params(a);
    json j = p;
    j["A"] = a;
    std::string t = "d = " + std::to_string(p.d);
    if (p.alpha) t += ", alpha = " + std::to_string(*p.alpha);
    if (p.frobenius) t += ", F = " + std::to_string(*p.frobenius);
    if (p.big_a) t += ", (F+1)d = " + std::to_string(*p.big_a);
    emit(cfg, j, t);
  });

  // ideal
  auto* ideal = app.add_subcommand("ideal", "ideal membership, generators, primality, equality");
  ideal->require_subcommand(1);
  SpecArgs spec1;
  SpecArgs spec2;
  std::string ifx;
  auto* imember = ideal->add_subcommand("member", "decide f in the ideal, with a cover witness");
  spec1.add(imember);
  imember->add_option("--f", ifx)->required();
  imember->callback([&] {
    const bp::IdealSpec s = spec1.build(cfg);
    const bp::Poly f = poly_arg("--f", ifx, s.nvars());
    const bp::MembershipVerdict v = bp::member(f, s);
    json j = bp::verdict_to_json(v, s.nvars());
    j["f"] = f;
    emit(cfg, j, to_string(f) + (v.is_member ? " is a member" + cover_text(v) : " is not a member"));
    if (!v.is_member) code = 1;
  });
  auto* igens = ideal->add_subcommand("generators", "generators of total degree <= bound");
  spec1.add(igens);
  igens->callback([&] {
    const bp::IdealSpec s = spec1.build(cfg);
    const auto g = bp::enumerate_generators(s, cfg.bound);
    std::string t;
    for (const auto& p : g) t += (t.empty() ? "" : "\n") + to_string(p);
    emit(cfg, {{"bound", cfg.bound}, {"generators", g}}, t);
  });
  auto* iextract = ideal->add_subcommand("extract-A", "{a : 1 + X^a in the ideal} up to the bound");
  spec1.add(iextract);
  iextract->callback([&] {
    const bp::IdealSpec s = spec1.build(cfg);
    if (s.nvars() == 1) {
      const auto a = bp::extract_A(s, cfg.bound);
      const bool prime = bp::is_prime_subset(a).prime;
      emit(cfg, {{"bound", cfg.bound}, {"A", a}, {"prime", prime}},
           "A on [1, " + std::to_string(cfg.bound) + "] = " + nat_join(a) + (prime ? " (prime)" : " (not prime)"));
    } else {
      const bp::PrimeSubsetN a = bp::extract_A_n_subset(s, cfg.bound);
      emit(cfg, {{"box", cfg.bound}, {"A", a}}, "A in box " + std::to_string(cfg.bound) + " = " + to_string(a));
    }
  });
  auto* iprime = ideal->add_subcommand("prime-check", "bounded primality search");
  spec1.add(iprime);
  iprime->callback([&] {
    const bp::IdealSpec s = spec1.build(cfg);
    const bp::PrimalityReport r = bp::primality_search(s, cfg.bound, cfg.workers);
    std::string t = r.prime_up_to_bound()
                        ? "no counterexample up to degree " + std::to_string(cfg.bound) + " (bounded evidence, " +
                              std::to_string(r.nonmembers) + " non-members, " + std::to_string(r.pairs_checked) +
                              " pairs)"
                        : counterexample_text(r);
    emit(cfg, r, t);
    if (!r.prime_up_to_bound()) code = 1;
  });
  auto* iequal = ideal->add_subcommand("equal", "compare two ideals up to the bound");
  spec1.add(iequal);
  spec2.add(iequal, "2");
  iequal->callback([&] {
    const bp::IdealSpec a = spec1.build(cfg);
    const bp::IdealSpec b = spec2.build(cfg, "2");
    const bp::EqualityReport r = bp::equal_up_to(a, b, cfg.bound);
    std::string t = r.equal ? "equal up to degree " + std::to_string(cfg.bound) : "not equal";
    if (r.only_in_first) t += "\n  only in first: " + to_string(*r.only_in_first);
    if (r.only_in_second) t += "\n  only in second: " + to_string(*r.only_in_second);
    emit(cfg, r, t);
    if (!r.equal) code = 1;
  });

  // classify
  auto* cls = app.add_subcommand("classify", "classify a prime ideal of B[x]");
  SpecArgs cspec;
  cspec.add(cls);
  cls->callback([&] {
    const bp::IdealSpec s = cspec.build(cfg);
    try {
      const bp::ClassificationReport r = bp::classify(s, cfg.bound, cfg.workers);
      std::string t = "category " + to_string(r.category) + ", A = " + to_string(r.A) + ", d = " +
                      std::to_string(r.d) + ", branch " + to_string(r.branch);
      if (r.big_a) t += ", (F+1)d = " + std::to_string(*r.big_a);
      if (!r.Q.empty()) {
        t += ", Q = {";
        for (std::size_t i = 0; i < r.Q.size(); ++i) t += (i ? ", " : "") + to_string(r.Q[i]);
        t += "}";
      }
      for (const auto& e : r.evidence) t += "\n  " + e.claim + ": " + to_string(e.poly);
      t += "\n  reconstruction " + std::string(r.reconstruction_equal ? "agrees" : "DIFFERS") + " up to degree " +
           std::to_string(r.bound);
      for (const auto& n : r.notes) t += "\n  note: " + n;
      emit(cfg, r, t);
      if (!r.reconstruction_equal) code = 1;
    } catch (const bp::NotPrimeIdeal& e) {
      emit(cfg, {{"error", "not-prime"}, {"report", e.report()}}, counterexample_text(e.report()));
      code = 1;
    } catch (const bp::BranchConflict& e) {
      emit(cfg, {{"error", "branch-conflict"}, {"ja", e.ja_witness()}, {"star", e.star_witness()}}, e.what());
      code = 1;
    } catch (const bp::InconclusiveBranch& e) {
      emit(cfg, {{"error", "inconclusive"}, {"message", e.what()}}, e.what());
      code = 1;
    }
  });

  // identity
  auto* ident = app.add_subcommand("identity", "product identities");
  ident->require_subcommand(1);
  std::string iname;
  const std::vector<std::string> names{"eq_product",    "three_term",    "product_rule1", "product_rule2",
                                       "product_rule3", "product_rule4", "multivar"};
  auto* isweep = ident->add_subcommand("sweep", "run a parameter sweep");
  isweep->add_option("--name", iname)->required()->check(CLI::IsMember(names));
  std::size_t trials = 200;
  isweep->add_option("--trials", trials, "random cases for three_term / multivar");
  isweep->callback([&] {
    std::vector<bp::IdentityCheckResult> rs;
    if (iname == "eq_product") rs = bp::sweep_eq_product(6);
    if (iname == "three_term") rs = bp::sweep_three_term(trials, 6, cfg.seed);
    if (iname == "product_rule1") rs = bp::sweep_product_rule1();
    if (iname == "product_rule2") rs = bp::sweep_product_rule2(6);
    if (iname == "product_rule3") rs = bp::sweep_product_rule3(7);
    if (iname == "product_rule4") rs = bp::sweep_product_rule4(8);
    if (iname == "multivar") rs = bp::sweep_multivar(trials, cfg.seed);
    emit(cfg, identity_json(rs), identity_text(rs));
    if (!all_equal(rs)) code = 1;
  });
  auto* icheck = ident->add_subcommand("check", "check one instance");
  icheck->add_option("--name", iname)->required()->check(CLI::IsMember(names));
  bp::Exp r_ = 0, s_ = 0, alpha = 0, m = 0, a = 0, b = 0, p = 0, q = 0;
  std::string ia, ib, ic, iA;
  icheck->add_option("--r", r_);
  icheck->add_option("--s", s_);
  icheck->add_option("--alpha", alpha);
  icheck->add_option("--m", m);
  icheck->add_option("--a", a);
  icheck->add_option("--b", b);
  icheck->add_option("--p", p);
  icheck->add_option("--q", q);
  icheck->add_option("--A", iA, "prime subset for product_rule2");
  icheck->add_option("--f", ia, "f of multivar");
  icheck->add_option("--t1", ib, "three_term: first term");
  icheck->add_option("--t2", ic, "three_term: second term");
  std::string id_;
  icheck->add_option("--t3", id_, "three_term: third term");
  icheck->callback([&] {
    bp::IdentityCheckResult r = parse_arg("--name", iname, [&](const std::string&) {
      if (iname == "eq_product") return bp::check_eq_product(r_, s_);
      if (iname == "product_rule1") return bp::check_product_rule1(alpha, m);
      if (iname == "product_rule2") {
        return bp::check_product_rule2(
            parse_arg("--A", iA, [](const std::string& t) { return bp::parse_prime_subset(t); }), a, m);
      }
      if (iname == "product_rule3") return bp::check_product_rule3(alpha, a, m);
      if (iname == "product_rule4") return bp::check_product_rule4(alpha, m);
      if (iname == "three_term") {
        return bp::check_three_term(poly_arg("--t1", ib, cfg.nvars), poly_arg("--t2", ic, cfg.nvars),
                                    poly_arg("--t3", id_, cfg.nvars));
      }
      return bp::check_multivar_identities(a, b, p, q, poly_arg("--f", ia.empty() ? "0" : ia, 2));
    });
    emit(cfg, r, identity_text({r}));
    if (!r.equal) code = 1;
  });

  // multivar
  auto* mv = app.add_subcommand("multivar", "several variables");
  mv->require_subcommand(1);
  std::string mA;
  std::string mf;
  auto* mcheck = mv->add_subcommand("subset-check", "is a finite subset of N^n prime");
  mcheck->add_option("--A", mA, "\"(1,0);(0,1)\"")->required();
  bool all_positive = false;
  mcheck->add_flag("--all-positive", all_positive, "split into vectors with every coordinate positive");
  mcheck->callback([&] {
    const std::size_t n = cfg.nvars < 2 ? 2 : cfg.nvars;
    const bp::PrimeSubsetN A = parse_arg("--A", mA, [&](const std::string& t) { return bp::parse_prime_subset_n(t, n); });
    const bp::PrimeCheckN c = bp::is_prime_subset_n(
        A, all_positive ? bp::SubsetReading::AllPositive : bp::SubsetReading::NonNegativeNonZero);
    json j = c;
    j["A"] = A;
    std::string t = to_string(A) + (c.prime ? " is prime" : " is not prime");
    if (c.violation) {
      auto v = [](const bp::ExpVec& e) {
        std::string s = "(";
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        return s + ")";
      };
      t += ": " + v(c.violation->first) + " + " + v(c.violation->second) + " lies in A, neither summand does";
    }
    emit(cfg, j, t);
    if (!c.prime) code = 1;
  });
  auto* mmember = mv->add_subcommand("member-ia", "support test for I_A");
  mmember->add_option("--A", mA)->required();
  mmember->add_option("--f", mf)->required();
  mmember->callback([&] {
    const std::size_t n = cfg.nvars < 2 ? 2 : cfg.nvars;
    const bp::PrimeSubsetN A = parse_arg("--A", mA, [&](const std::string& t) { return bp::parse_prime_subset_n(t, n); });
    const bp::Poly f = poly_arg("--f", mf, n);
    const bool in = bp::member_IA_n(f, A);
    emit(cfg, {{"A", A}, {"f", f}, {"is_member", in}}, to_string(f) + (in ? " is a member" : " is not a member"));
    if (!in) code = 1;
  });
  auto* mconj = mv->add_subcommand("conjecture", "is {a : 1 + X^a in P} prime for the fixture primes");
  mconj->callback([&] {
    std::vector<std::pair<std::string, bp::IdealSpec>> primes{{"P1", bp::build_P1()}, {"P2", bp::build_P2()}};
    for (const char* t : {"{}", "(1,0)", "(0,1)", "(1,0);(2,0)", "(1,0);(0,1)"}) {
      const bp::PrimeSubsetN A = bp::parse_prime_subset_n(t, 2);
      primes.emplace_back(std::string("I_") + to_string(A), bp::build_IA_n(A));
    }
    const auto cases = bp::conjecture_check(primes, cfg.bound);
    json j = json::array();
    std::string t;
    bool ok = true;
    for (const auto& c : cases) {
      j.push_back(c);
      ok = ok && c.check.prime;
      t += (t.empty() ? "" : "\n") + c.name + ": A = " + to_string(c.A) + (c.check.prime ? " prime" : " NOT prime");
    }
    emit(cfg, j, t);
    if (!ok) code = 1;
  });

  // acceptance battery
  auto* ps = app.add_subcommand("paper-suite", "run the full acceptance battery");
  std::vector<int> only;
  ps->add_option("--only", only, "criterion ids")->check(CLI::Range(1, bp::suite::kCriterionCount));
  ps->callback([&] {
    bp::suite::SuiteOptions o;
    o.seed = cfg.seed;
    o.workers = cfg.workers;
    if (only.empty()) {
      for (int i = 1; i <= bp::suite::kCriterionCount; ++i) only.push_back(i);
    }
    json j = json::array();
    std::size_t passed = 0;
    if (!cfg.json) std::cout << "kernel: " << bp::kernels::active().name << '\n';
    for (int id : only) {
      const auto r = bp::suite::run_criterion(id, o);
      if (r.passed) ++passed;
      if (cfg.json) {
        j.push_back(r);
      } else {
        std::cout << bp::suite::format_line(r) << std::endl;
        for (const auto& f : r.failures) std::cout << "    " << f << '\n';
      }
    }
    if (cfg.json) {
      std::cout << json{{"criteria", j}, {"passed", passed}, {"total", only.size()}}.dump(2) << '\n';
    } else {
      std::cout << passed << "/" << only.size() << " criteria passed\n";
    }
    if (passed != only.size()) code = 1;
  });

  auto fall = [](auto&& self, CLI::App* a) -> void {
    for (CLI::App* sub : a->get_subcommands({})) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  fall(fall, &app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.arg << ": " << e.message << '\n';
    if (e.position && !e.text.empty()) {
      std::cerr << "  " << e.text << "\n  " << std::string(*e.position, ' ') << "^\n";
    }
    return 2;
  } catch (const bp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}
