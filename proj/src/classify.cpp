#include "boolprime/classify.hpp"

#include <algorithm>

namespace boolprime {
namespace {

Poly tri(Exp a, Exp b) { return Poly::from_exponents({0, a, b}); }

void require_category_two(const IdealSpec& spec) {
  if (spec.nvars() != 1) throw VariableMismatch(1, spec.nvars());
  if (contains_x(spec)) throw PreconditionError("ideal contains x (category I)");
}

// Least member of `probes` (already in graded order) or nothing.
std::optional<std::pair<Poly, MembershipVerdict>> first_member(const IdealView& view,
                                                               const std::vector<Poly>& probes) {
  for (const auto& p : probes) {
    MembershipVerdict v = view.verdict(p);
    if (v.is_member) return std::make_pair(p, std::move(v));
  }
  return std::nullopt;
}

BranchDetection decide(const IdealView& view, const std::vector<Poly>& ja_probes,
                       const std::vector<Poly>& star_probes) {
  auto ja = first_member(view, ja_probes);
  auto star = first_member(view, star_probes);
  BranchDetection r;
  if (ja && star) throw BranchConflict(ja->first, star->first);
  if (ja) {
    r.outcome = DetectOutcome::JA;
    r.witness = ja->first;
    r.verdict = std::move(ja->second);
  } else if (star) {
    r.outcome = DetectOutcome::Star;
    r.witness = star->first;
    r.verdict = std::move(star->second);
  }
  return r;
}

std::vector<Poly> reduce_against(const IdealSpec& base, std::vector<Poly> cands, Exp D) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  const std::vector<Poly> base_gens = enumerate_generators(base, D);
  std::vector<Poly> kept;
  for (const auto& c : cands) {
    if (c.total_degree() > D) continue;
    std::vector<Poly> gens = base_gens;
    gens.insert(gens.end(), kept.begin(), kept.end());
    if (gens.empty() || !IdealView(IdealSpec::explicit_ideal(gens, 1), D).contains(c)) kept.push_back(c);
  }
  return kept;
}

}  // namespace

IdealSpec build_family(const FamilyDesc& desc) { return IdealSpec::family(desc); }

BranchDetection detect_branch_d1(const IdealSpec& spec, const PrimeSubset& A, Exp D) {
  if (!A.is_finite() || A.empty()) throw PreconditionError("detect_branch_d1 needs a finite non-empty A");
  require_category_two(spec);
  std::vector<Poly> ja;
  std::vector<Poly> star;
  for (Exp top = 2; top <= D; ++top) {
    // 1 + x^a + x^top, a in A, top and top - a outside A.
    for (Nat a : A.elements_up_to(top - 1)) {
      if (!A.contains(top) && !A.contains(top - a)) ja.push_back(tri(a, top));
    }
    // 1 + x^n + x^top with top - n in A, n and top outside A.
    for (Exp n = 1; n < top; ++n) {
      if (A.contains(top - n) && !A.contains(n) && !A.contains(top)) star.push_back(tri(n, top));
    }
  }
  return decide(IdealView(spec, D), ja, star);
}

BranchDetection detect_branch_dgt1(const IdealSpec& spec, const PrimeSubset& A, Exp D) {
  const auto* c = A.as_cofinite();
  if (c == nullptr) throw PreconditionError("detect_branch_dgt1 needs an infinite A (d > 1)");
  if (!A.contains(c->d)) {
    throw PreconditionError("d = " + std::to_string(c->d) + " is not in A; the ideal is forced to be J_A");
  }
  if (!c->semigroup.is_interval_form()) {
    throw PreconditionError("semigroup " + to_string(A) + " is not of the form {a1, a1+1, ...}");
  }
  require_category_two(spec);
  const Nat d = c->d;
  const Nat big_a = *class_params(A).big_a;
  std::vector<Poly> ja;
  std::vector<Poly> star;
  for (Exp top = 2; top <= D; ++top) {
    if (top > d && !A.contains(top) && top != big_a) ja.push_back(tri(d, top));
    for (Exp m = big_a; m < top; ++m) {
      if (!A.contains(m) && (top - m) % d == 0) star.push_back(tri(m, top));
    }
  }
  return decide(IdealView(spec, D), ja, star);
}

std::string to_string(Category c) { return c == Category::I ? "I" : "II"; }

std::string to_string(Branch b) {
  switch (b) {
    case Branch::IA:
      return "I_A";
    case Branch::Zero:
      return "zero";
    case Branch::JA:
      return "JA";
    case Branch::Star:
      return "star";
  }
  return "?";
}

std::vector<Poly> recover_q(const IdealSpec& spec, const IdealSpec& base, const PrimeSubset& A, Exp D) {
  const IdealView in_spec(spec, D);
  const IdealView in_base(base, D);
  std::vector<Poly> cands;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << D); ++mask) {
    std::vector<Exp> exps{0};
    for (Exp e = 1; e <= D; ++e) {
      if ((mask >> (e - 1)) & 1U) exps.push_back(e);
    }
    const Poly f = Poly::from_exponents(exps);
    if (!property_star(f, A).holds) continue;
    if (in_spec.contains(f) && !in_base.contains(f)) cands.push_back(f);
  }
  return reduce_against(base, std::move(cands), D);
}

std::vector<Poly> reduced_q(const FamilyDesc& desc, Exp D) {
  const std::vector<Poly>* q = nullptr;
  if (const auto* s = std::get_if<family::StarD1>(&desc)) q = &s->Q;
  if (const auto* s = std::get_if<family::StarDgt1>(&desc)) q = &s->Q;
  if (q == nullptr) return {};
  return reduce_against(build_family(star_base(desc)), *q, D);
}

ClassificationReport classify(const IdealSpec& spec, Exp D, unsigned workers) {
  if (spec.nvars() != 1) throw VariableMismatch(1, spec.nvars());
  PrimalityReport pr = primality_search(spec, D, workers);
  if (!pr.prime_up_to_bound()) throw NotPrimeIdeal(std::move(pr));

  ClassificationReport r;
  r.bound = D;
  r.notes.push_back("bounded evidence: primality searched at degree " + std::to_string(D) +
                    ", A read on [1, " + std::to_string(2 * D) + "]");
  const std::vector<Nat> prefix = extract_A(spec, 2 * D);
  r.A = PrimeSubset::from_prefix(prefix, 2 * D);
  r.d = r.A.class_d();
  if (!r.A.is_finite()) r.big_a = class_params(r.A).big_a;

  if (contains_x(spec)) {
    r.category = Category::I;
    r.branch = Branch::IA;
    r.evidence.push_back({"x is a member", Poly::x_pow(1), true});
    r.family = family::CatI{r.A};
  } else {
    r.category = Category::II;
    r.evidence.push_back({"x is not a member", Poly::x_pow(1), false});
    if (r.A.empty()) {
      r.branch = Branch::Zero;
      r.notes.push_back("A is empty: the ideal is zero");
      r.reconstruction_equal = equal_up_to(spec, IdealSpec::explicit_ideal({}, 1), D).equal;
      return r;
    }
    if (r.d > 1 && !r.A.contains(r.d)) {
      r.branch = Branch::JA;
      r.notes.push_back("d = " + std::to_string(r.d) + " is not in A: the J_A form is forced");
      r.family = family::JA{r.A};
    } else {
      const BranchDetection det = r.d == 1 ? detect_branch_d1(spec, r.A, D) : detect_branch_dgt1(spec, r.A, D);
      if (det.outcome == DetectOutcome::Inconclusive) {
        throw InconclusiveBranch("no branch probe is a member up to degree " + std::to_string(D));
      }
      if (det.outcome == DetectOutcome::JA) {
        r.branch = Branch::JA;
        r.evidence.push_back({"J_A probe is a member", *det.witness, true});
        r.family = family::JA{r.A};
      } else {
        r.branch = Branch::Star;
        r.evidence.push_back({"star probe is a member", *det.witness, true});
        const FamilyDesc base = r.d == 1 ? FamilyDesc{family::StarD1{r.A, {}}} : FamilyDesc{family::StarDgt1{r.A, {}}};
        r.Q = recover_q(spec, build_family(base), r.A, D);
        if (r.d == 1) {
          r.family = family::StarD1{r.A, r.Q};
        } else {
          r.family = family::StarDgt1{r.A, r.Q};
        }
      }
    }
  }
  r.reconstruction_equal = equal_up_to(spec, build_family(*r.family), D).equal;
  return r;
}

void to_json(nlohmann::json& j, const ClassificationReport& r) {
  nlohmann::json q = nlohmann::json::array();
  for (const auto& p : r.Q) q.push_back(to_string(p));
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : r.evidence) ev.push_back({{"claim", e.claim}, {"poly", to_string(e.poly)}, {"member", e.member}});
  j = nlohmann::json{{"category", to_string(r.category)},
                     {"A", r.A},
                     {"d", r.d},
                     {"branch", to_string(r.branch)},
                     {"Q", q},
                     {"bound", r.bound},
                     {"evidence", ev},
                     {"reconstruction_equal", r.reconstruction_equal},
                     {"notes", r.notes}};
  j["big_a"] = r.big_a ? nlohmann::json(*r.big_a) : nlohmann::json(nullptr);
  j["family"] = r.family ? nlohmann::json(*r.family) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, ClassificationReport& r) {
  r = ClassificationReport{};
  const std::string cat = j.at("category").get<std::string>();
  if (cat != "I" && cat != "II") throw Error("unknown category '" + cat + "'");
  r.category = cat == "I" ? Category::I : Category::II;
  r.A = j.at("A").get<PrimeSubset>();
  r.d = j.at("d").get<Nat>();
  const std::string br = j.at("branch").get<std::string>();
  if (br == "I_A") {
    r.branch = Branch::IA;
  } else if (br == "zero") {
    r.branch = Branch::Zero;
  } else if (br == "JA") {
    r.branch = Branch::JA;
  } else if (br == "star") {
    r.branch = Branch::Star;
  } else {
    throw Error("unknown branch '" + br + "'");
  }
  for (const auto& q : j.at("Q")) r.Q.push_back(parse_poly(q.get<std::string>()));
  r.bound = j.at("bound").get<Exp>();
  for (const auto& e : j.at("evidence")) {
    r.evidence.push_back({e.at("claim").get<std::string>(), parse_poly(e.at("poly").get<std::string>()),
                          e.at("member").get<bool>()});
  }
  r.reconstruction_equal = j.at("reconstruction_equal").get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (!j.at("big_a").is_null()) r.big_a = j.at("big_a").get<Nat>();
  if (!j.at("family").is_null()) r.family = j.at("family").get<FamilyDesc>();
}

}  // namespace boolprime
