#include "boolprime/ideals.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "boolprime/errors.hpp"

namespace boolprime {
namespace {

using kernels::Word;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool leading_pair_member(const Poly& f) {
  if (f.is_zero()) return true;
  return has_subleading(f);
}

bool ja_set_difference_member(const Poly& f, const PrimeSubset& A) {
  if (f.is_zero()) return true;
  const auto sup = f.support();
  const Exp low = sup.front();
  for (std::size_t i = 1; i < sup.size(); ++i) {
    if (A.contains(sup[i] - low)) return true;
  }
  return false;
}

// Key used to reduce generating sets: smaller generators are kept first.
bool reduction_less(const Poly& a, const Poly& b) {
  const Exp da = a.total_degree();
  const Exp db = b.total_degree();
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() < b.size();
  return support_lex_less(a, b);
}

bool words_equal(std::span<const Word> a, std::span<const Word> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// All nonzero polynomials supported on a fixed monomial list.
struct Universe {
  std::size_t nvars;
  std::vector<ExpVec> monomials;

  Universe(std::size_t n, Exp D) : nvars(n), monomials(simplex_monomials(n, D)) {
    if (monomials.size() > 24) {
      throw PreconditionError("search universe too large: " + std::to_string(monomials.size()) +
                              " monomials");
    }
  }
  std::uint32_t count() const { return (std::uint32_t{1} << monomials.size()) - 1; }
  Poly poly(std::uint32_t mask) const {
    std::vector<Exp> flat;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      if ((mask >> i) & 1U) flat.insert(flat.end(), monomials[i].begin(), monomials[i].end());
    }
    return Poly::from_flat(nvars, std::move(flat));
  }
  DenseSet pack(std::uint32_t mask, const Packing& p) const {
    DenseSet s(p.nwords());
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      if ((mask >> i) & 1U) s.set(p.index(monomials[i]));
    }
    return s;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// IdealSpec

IdealSpec IdealSpec::explicit_ideal(std::vector<Poly> generators, std::size_t nvars) {
  if (nvars == 0) nvars = generators.empty() ? 1 : generators.front().nvars();
  for (const auto& g : generators) {
    if (g.is_zero()) throw PreconditionError("explicit generators must be nonzero");
    if (g.nvars() != nvars) throw VariableMismatch(nvars, g.nvars());
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return IdealSpec(Explicit{nvars, std::move(generators)});
}

IdealSpec IdealSpec::family(FamilyDesc desc) {
  validate(desc);
  return IdealSpec(Family{std::move(desc)});
}

IdealSpec IdealSpec::leading_pair() { return IdealSpec(Characterized{Characterization::LeadingPair, {}}); }

IdealSpec IdealSpec::ja_set_difference(PrimeSubset A) {
  return IdealSpec(Characterized{Characterization::JASetDifference, std::move(A)});
}

std::size_t IdealSpec::nvars() const {
  return std::visit(overloaded{[](const Explicit& e) { return e.nvars; },
                               [](const Family& f) { return boolprime::nvars(f.desc); },
                               [](const Characterized&) { return std::size_t{1}; }},
                    rep_);
}

std::vector<Poly> enumerate_generators(const IdealSpec& spec, Exp bound) {
  return std::visit(overloaded{[&](const IdealSpec::Explicit& e) {
                                 std::vector<Poly> out;
                                 for (const auto& g : e.generators) {
                                   if (g.total_degree() <= bound) out.push_back(g);
                                 }
                                 return out;
                               },
                               [&](const IdealSpec::Family& f) { return family_generators(f.desc, bound); },
                               [](const IdealSpec::Characterized&) { return std::vector<Poly>{}; }},
                    spec.rep());
}

// ---------------------------------------------------------------------------
// IdealView

IdealView::IdealView(const IdealSpec& spec, Exp bound)
    : spec_(spec), bound_(bound), packing_(spec.nvars(), bound) {
  if (!spec_.has_generators()) return;
  std::vector<Poly> gens = enumerate_generators(spec_, bound);
  std::sort(gens.begin(), gens.end(), reduction_less);

  const std::size_t n = packing_.nvars();
  const std::size_t nbits = packing_.nbits();
  std::vector<Exp> pos(n);
  for (auto& g : gens) {
    Gen entry;
    entry.terms = packed_indices(g, packing_);
    std::vector<Exp> top(n, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto t = g.term(i);
      for (std::size_t v = 0; v < n; ++v) top[v] = std::max(top[v], t[v]);
    }
    entry.shifts = DenseSet(packing_.nwords());
    if (n == 1) {
      for (std::size_t k = 0; k + top[0] <= bound; ++k) entry.shifts.set(k);
    } else {
      for (std::size_t idx = 0; idx < nbits; ++idx) {
        packing_.unpack_index(idx, pos);
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) ok = pos[v] + top[v] <= bound;
        if (ok) entry.shifts.set(idx);
      }
    }
    const DenseSet packed = pack(g, packing_);
    if (covers(packed, gens_.size(), nullptr)) continue;
    entry.poly = std::move(g);
    gens_.push_back(std::move(entry));
  }
}

std::vector<Poly> IdealView::generators() const {
  std::vector<Poly> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.poly);
  std::sort(out.begin(), out.end());
  return out;
}

bool IdealView::anchored(const DenseSet& f, std::size_t bit, bool low, std::size_t ngens) const {
  for (std::size_t gi = 0; gi < ngens; ++gi) {
    const Gen& g = gens_[gi];
    const std::size_t t0 = low ? g.terms.front() : g.terms.back();
    if (bit < t0) continue;
    const std::size_t k = bit - t0;
    if (!g.shifts.test(k)) continue;
    bool inside = true;
    for (std::size_t t : g.terms) {
      if (!f.test(k + t)) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

template <std::size_t NW>
bool IdealView::covers_fixed(const DenseSet& f, std::size_t ngens) const {
  constexpr std::size_t B = kernels::kWordBits;
  Word fw[NW];
  Word covered[NW] = {};
  std::copy_n(f.words().begin(), NW, fw);
  for (std::size_t gi = 0; gi < ngens; ++gi) {
    const Gen& g = gens_[gi];
    Word cand[NW];
    std::copy_n(g.shifts.words().begin(), NW, cand);
    bool any = true;
    for (std::size_t t : g.terms) {
      const std::size_t ws = t / B;
      const unsigned bs = static_cast<unsigned>(t % B);
      Word acc = 0;
      for (std::size_t i = 0; i < NW; ++i) {
        const std::size_t j = i + ws;
        Word v = j < NW ? (fw[j] >> bs) : 0;
        if (bs != 0 && j + 1 < NW) v |= fw[j + 1] << (B - bs);
        cand[i] &= v;
        acc |= cand[i];
      }
      if (acc == 0) {
        any = false;
        break;
      }
    }
    if (!any) continue;
    bool done = true;
    for (std::size_t t : g.terms) {
      const std::size_t ws = t / B;
      const unsigned bs = static_cast<unsigned>(t % B);
      for (std::size_t i = ws; i < NW; ++i) {
        const std::size_t j = i - ws;
        Word v = cand[j] << bs;
        if (bs != 0 && j >= 1) v |= cand[j - 1] >> (B - bs);
        covered[i] |= v;
      }
    }
    for (std::size_t i = 0; i < NW; ++i) done = done && covered[i] == fw[i];
    if (done) return true;
  }
  return false;
}

bool IdealView::covers(const DenseSet& f, std::size_t ngens, DenseSet* covered_out) const {
  const std::size_t nw = packing_.nwords();
  if (covered_out == nullptr) {
    std::size_t lo = 0;
    std::size_t hi = 0;
    bool first = true;
    f.for_each([&](std::size_t b) {
      if (first) lo = b;
      first = false;
      hi = b;
    });
    if (first) return true;
    if (!anchored(f, lo, true, ngens) || !anchored(f, hi, false, ngens)) return false;
    if (nw == 1) return covers_fixed<1>(f, ngens);
    if (nw == 2) return covers_fixed<2>(f, ngens);
  }
  thread_local std::vector<Word> covered;
  thread_local std::vector<Word> cand;
  covered.assign(nw, 0);
  cand.resize(nw);
  const auto fw = f.words();
  for (std::size_t gi = 0; gi < ngens; ++gi) {
    const Gen& g = gens_[gi];
    const auto sw = g.shifts.words();
    std::copy(sw.begin(), sw.end(), cand.begin());
    bool any = true;
    for (std::size_t t : g.terms) {
      kernels::and_shr(cand, fw, t);
      if (std::all_of(cand.begin(), cand.end(), [](Word w) { return w == 0; })) {
        any = false;
        break;
      }
    }
    if (!any) continue;
    for (std::size_t t : g.terms) kernels::or_shl(covered, cand, t);
    if (covered_out == nullptr && words_equal(covered, fw)) return true;
  }
  if (covered_out != nullptr) {
    *covered_out = DenseSet(nw);
    std::copy(covered.begin(), covered.end(), covered_out->words().begin());
  }
  return words_equal(covered, fw);
}

bool IdealView::predicate(const Poly& f) const {
  const auto& c = std::get<IdealSpec::Characterized>(spec_.rep());
  switch (c.kind) {
    case Characterization::LeadingPair:
      return leading_pair_member(f);
    case Characterization::JASetDifference:
      return ja_set_difference_member(f, c.A);
  }
  return false;
}

void IdealView::check_fits(const Poly& f) const {
  if (f.nvars() != packing_.nvars()) throw VariableMismatch(packing_.nvars(), f.nvars());
  if (!f.is_zero() && f.total_degree() > bound_) {
    throw PreconditionError("polynomial of degree " + std::to_string(f.total_degree()) +
                            " exceeds the view bound " + std::to_string(bound_));
  }
}

bool IdealView::contains(const Poly& f) const {
  check_fits(f);
  if (f.is_zero()) return true;
  if (!spec_.has_generators()) return predicate(f);
  return covers(pack(f, packing_), gens_.size(), nullptr);
}

bool IdealView::contains_dense(const DenseSet& f) const {
  if (f.none()) return true;
  if (!spec_.has_generators()) return predicate(unpack(f, packing_));
  return covers(f, gens_.size(), nullptr);
}

MembershipVerdict IdealView::verdict(const Poly& f) const {
  MembershipVerdict v;
  check_fits(f);
  if (f.is_zero()) {
    v.is_member = true;
    return v;
  }
  if (!spec_.has_generators()) {
    v.is_member = predicate(f);
    return v;
  }
  const DenseSet packed = pack(f, packing_);
  if (!covers(packed, gens_.size(), nullptr)) return v;
  v.is_member = true;

  const std::size_t nw = packing_.nwords();
  DenseSet covered(nw);
  std::vector<Word> cand(nw);
  std::vector<Exp> shift(packing_.nvars());
  for (const Gen& g : gens_) {
    const auto sw = g.shifts.words();
    std::copy(sw.begin(), sw.end(), cand.begin());
    for (std::size_t t : g.terms) kernels::and_shr(cand, packed.words(), t);
    for (std::size_t w = 0; w < nw; ++w) {
      Word bits = cand[w];
      while (bits != 0) {
        const std::size_t k = w * kernels::kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        bool adds = false;
        for (std::size_t t : g.terms) {
          if (!covered.test(k + t)) adds = true;
        }
        if (!adds) continue;
        for (std::size_t t : g.terms) covered.set(k + t);
        packing_.unpack_index(k, shift);
        v.cover.push_back(CoverTerm{g.poly, shift});
      }
    }
    if (covered == packed) break;
  }
  // Drop translates covered by the rest, earliest first.
  std::vector<unsigned> hits(packing_.nbits(), 0);
  std::vector<std::vector<std::size_t>> bits_of;
  for (const auto& c : v.cover) {
    std::vector<std::size_t> bits;
    const std::size_t k = packing_.index(c.shift);
    for (std::size_t t : packed_indices(c.generator, packing_)) bits.push_back(k + t);
    for (std::size_t b : bits) ++hits[b];
    bits_of.push_back(std::move(bits));
  }
  std::vector<CoverTerm> kept;
  for (std::size_t i = 0; i < v.cover.size(); ++i) {
    const bool redundant =
        std::all_of(bits_of[i].begin(), bits_of[i].end(), [&](std::size_t b) { return hits[b] >= 2; });
    if (redundant) {
      for (std::size_t b : bits_of[i]) --hits[b];
    } else {
      kept.push_back(std::move(v.cover[i]));
    }
  }
  v.cover = std::move(kept);
  return v;
}

MembershipVerdict member(const Poly& f, const IdealSpec& spec) {
  if (f.nvars() != spec.nvars()) throw VariableMismatch(spec.nvars(), f.nvars());
  if (f.is_zero()) return MembershipVerdict{true, {}};
  return IdealView(spec, f.total_degree()).verdict(f);
}

std::vector<Nat> extract_A(const IdealSpec& spec, Nat bound) {
  if (spec.nvars() != 1) throw VariableMismatch(1, spec.nvars());
  const IdealView view(spec, bound);
  std::vector<Nat> out;
  for (Nat a = 1; a <= bound; ++a) {
    if (view.contains(Poly::from_exponents({0, a}))) out.push_back(a);
  }
  return out;
}

std::vector<ExpVec> extract_A_n(const IdealSpec& spec, Exp box) {
  const std::size_t n = spec.nvars();
  const IdealView view(spec, static_cast<Exp>(n) * box);
  const Packing grid(n, box);
  std::vector<ExpVec> out;
  ExpVec v(n);
  for (std::size_t idx = 1; idx < grid.nbits(); ++idx) {
    grid.unpack_index(idx, v);
    if (view.contains(Poly::from_terms(n, {ExpVec(n, 0), v}))) out.push_back(v);
  }
  return out;
}

bool contains_x(const IdealSpec& spec) {
  const std::size_t n = spec.nvars();
  const IdealView view(spec, 1);
  for (std::size_t i = 0; i < n; ++i) {
    ExpVec v(n, 0);
    v[i] = 1;
    if (!view.contains(Poly::monomial(v))) return false;
  }
  return true;
}

std::vector<ExpVec> simplex_monomials(std::size_t nvars, Exp D) {
  std::vector<ExpVec> out;
  ExpVec cur(nvars, 0);
  // Lex order: first coordinate most significant.
  auto rec = [&](auto&& self, std::size_t i, Exp left) -> void {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (Exp e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, D);
  return out;
}

// ---------------------------------------------------------------------------
// Primality search

PrimalityReport primality_search(const IdealSpec& spec, Exp D, unsigned workers) {
  const std::size_t n = spec.nvars();
  const Universe uni(n, D);
  const IdealView view(spec, 2 * D);
  const Packing& pk = view.packing();
  const std::size_t nw = pk.nwords();

  struct Item {
    Poly poly;
    Exp degree;
    DenseSet dense;
    std::vector<std::size_t> terms;
  };
  std::vector<Item> out_of_ideal;
  for (std::uint32_t mask = 1; mask <= uni.count(); ++mask) {
    DenseSet d = uni.pack(mask, pk);
    if (view.contains_dense(d)) continue;
    Poly p = uni.poly(mask);
    const Exp deg = p.total_degree();
    std::vector<std::size_t> terms = packed_indices(p, pk);
    out_of_ideal.push_back(Item{std::move(p), deg, std::move(d), std::move(terms)});
  }
  std::sort(out_of_ideal.begin(), out_of_ideal.end(),
            [](const Item& a, const Item& b) { return support_lex_less(a.poly, b.poly); });

  PrimalityReport report;
  report.nvars = n;
  report.bound = D;
  report.nonmembers = out_of_ideal.size();

  const std::size_t N = out_of_ideal.size();
  // Indices grouped by degree, each group in lex order.
  std::vector<std::vector<std::uint32_t>> by_degree(static_cast<std::size_t>(D) + 1);
  for (std::uint32_t i = 0; i < N; ++i) by_degree[out_of_ideal[i].degree].push_back(i);

  const unsigned nworkers = std::max(1U, std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(N, 1))));
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  for (Exp s = 0; s <= 2 * D; ++s) {
    // Best hit encoded as f_index * N + g_index (f before g in lex order).
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<std::size_t> pairs{0};
    auto work = [&](unsigned w) {
      DenseSet pd(nw);
      std::size_t local_pairs = 0;
      for (std::size_t fi = w; fi < N; fi += nworkers) {
        if (best.load(std::memory_order_relaxed) < static_cast<std::uint64_t>(fi) * N) break;
        const Item& f = out_of_ideal[fi];
        if (f.degree > s || s - f.degree > D) continue;
        for (std::uint32_t gi : by_degree[s - f.degree]) {
          if (gi < fi) continue;
          const Item& g = out_of_ideal[gi];
          auto pw = pd.words();
          std::fill(pw.begin(), pw.end(), 0);
          for (std::size_t t : g.terms) kernels::or_shl(pw, f.dense.words(), t);
          ++local_pairs;
          if (view.contains_dense(pd)) {
            const std::uint64_t key = static_cast<std::uint64_t>(fi) * N + gi;
            std::uint64_t cur = best.load();
            while (key < cur && !best.compare_exchange_weak(cur, key)) {
            }
            break;
          }
        }
      }
      pairs += local_pairs;
    };
    if (nworkers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < nworkers; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }
    const std::uint64_t hit = best.load();
    if (hit != kNone) {
      const Item& f = out_of_ideal[hit / N];
      const Item& g = out_of_ideal[hit % N];
      Counterexample c;
      c.f = f.poly;
      c.g = g.poly;
      c.product = mul(f.poly, g.poly);
      c.product_verdict = view.verdict(c.product);
      report.counterexample = std::move(c);
      return report;
    }
    report.pairs_checked += pairs.load();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Equality

EqualityReport equal_up_to(const IdealSpec& a, const IdealSpec& b, Exp D) {
  if (a.nvars() != b.nvars()) throw VariableMismatch(a.nvars(), b.nvars());
  const std::size_t n = a.nvars();
  const Universe uni(n, D);
  const IdealView va(a, D);
  const IdealView vb(b, D);
  EqualityReport r;
  r.nvars = n;
  r.bound = D;
  for (std::uint32_t mask = 1; mask <= uni.count(); ++mask) {
    const bool in_a = va.contains_dense(uni.pack(mask, va.packing()));
    const bool in_b = vb.contains_dense(uni.pack(mask, vb.packing()));
    if (in_a == in_b) continue;
    Poly p = uni.poly(mask);
    auto& slot = in_a ? r.only_in_first : r.only_in_second;
    if (!slot || p < *slot) slot = std::move(p);
  }
  r.equal = !r.only_in_first && !r.only_in_second;
  return r;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json poly_text(const Poly& p) { return to_string(p); }

Poly poly_from(const nlohmann::json& j, std::size_t nvars) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), nvars);
  return j.get<Poly>();
}

const char* characterization_name(Characterization c) {
  return c == Characterization::LeadingPair ? "leading-pair" : "ja-set-difference";
}

}  // namespace

void to_json(nlohmann::json& j, const IdealSpec& s) {
  std::visit(overloaded{[&](const IdealSpec::Explicit& e) {
                          nlohmann::json gens = nlohmann::json::array();
                          for (const auto& g : e.generators) gens.push_back(poly_text(g));
                          j = nlohmann::json{{"explicit", gens}, {"nvars", e.nvars}};
                        },
                        [&](const IdealSpec::Family& f) { j = nlohmann::json{{"family", f.desc}}; },
                        [&](const IdealSpec::Characterized& c) {
                          nlohmann::json body{{"kind", characterization_name(c.kind)}};
                          if (c.kind == Characterization::JASetDifference) body["A"] = c.A;
                          j = nlohmann::json{{"characterization", body}};
                        }},
             s.rep());
}

void from_json(const nlohmann::json& j, IdealSpec& s) {
  if (j.contains("explicit")) {
    const std::size_t n = j.value("nvars", std::size_t{1});
    std::vector<Poly> gens;
    for (const auto& g : j.at("explicit")) gens.push_back(poly_from(g, n));
    s = IdealSpec::explicit_ideal(std::move(gens), n);
  } else if (j.contains("family")) {
    s = IdealSpec::family(j.at("family").get<FamilyDesc>());
  } else if (j.contains("characterization")) {
    const auto& c = j.at("characterization");
    const std::string kind = c.at("kind").get<std::string>();
    if (kind == "leading-pair") {
      s = IdealSpec::leading_pair();
    } else if (kind == "ja-set-difference") {
      s = IdealSpec::ja_set_difference(c.at("A").get<PrimeSubset>());
    } else {
      throw Error("unknown characterization '" + kind + "'");
    }
  } else {
    throw Error("ideal spec needs 'explicit', 'family' or 'characterization'");
  }
}

nlohmann::json verdict_to_json(const MembershipVerdict& v, std::size_t) {
  nlohmann::json cover = nlohmann::json::array();
  for (const auto& c : v.cover) cover.push_back({{"generator", poly_text(c.generator)}, {"shift", c.shift}});
  return nlohmann::json{{"member", v.is_member}, {"cover", cover}};
}

MembershipVerdict verdict_from_json(const nlohmann::json& j, std::size_t nvars) {
  MembershipVerdict v;
  v.is_member = j.at("member").get<bool>();
  for (const auto& c : j.at("cover")) {
    v.cover.push_back(CoverTerm{poly_from(c.at("generator"), nvars), c.at("shift").get<std::vector<Exp>>()});
  }
  return v;
}

void to_json(nlohmann::json& j, const PrimalityReport& r) {
  j = nlohmann::json{{"nvars", r.nvars},
                     {"bound", r.bound},
                     {"product_bound", 2 * r.bound},
                     {"nonmembers", r.nonmembers},
                     {"pairs_checked", r.pairs_checked}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["outcome"] = "counterexample";
    j["f"] = poly_text(c.f);
    j["g"] = poly_text(c.g);
    j["product"] = poly_text(c.product);
    j["product_cover"] = verdict_to_json(c.product_verdict, r.nvars);
  } else {
    j["outcome"] = "prime-up-to-bound";
    j["evidence_only"] = true;
  }
}

void from_json(const nlohmann::json& j, PrimalityReport& r) {
  r = PrimalityReport{};
  r.nvars = j.at("nvars").get<std::size_t>();
  r.bound = j.at("bound").get<Exp>();
  r.nonmembers = j.at("nonmembers").get<std::size_t>();
  r.pairs_checked = j.at("pairs_checked").get<std::size_t>();
  const std::string outcome = j.at("outcome").get<std::string>();
  if (outcome == "counterexample") {
    Counterexample c;
    c.f = poly_from(j.at("f"), r.nvars);
    c.g = poly_from(j.at("g"), r.nvars);
    c.product = poly_from(j.at("product"), r.nvars);
    c.product_verdict = verdict_from_json(j.at("product_cover"), r.nvars);
    r.counterexample = std::move(c);
  } else if (outcome != "prime-up-to-bound") {
    throw Error("unknown primality outcome '" + outcome + "'");
  }
}

void to_json(nlohmann::json& j, const EqualityReport& r) {
  j = nlohmann::json{{"nvars", r.nvars}, {"bound", r.bound}, {"equal", r.equal}};
  j["only_in_first"] = r.only_in_first ? poly_text(*r.only_in_first) : nlohmann::json(nullptr);
  j["only_in_second"] = r.only_in_second ? poly_text(*r.only_in_second) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, EqualityReport& r) {
  r = EqualityReport{};
  r.nvars = j.at("nvars").get<std::size_t>();
  r.bound = j.at("bound").get<Exp>();
  r.equal = j.at("equal").get<bool>();
  if (!j.at("only_in_first").is_null()) r.only_in_first = poly_from(j.at("only_in_first"), r.nvars);
  if (!j.at("only_in_second").is_null()) r.only_in_second = poly_from(j.at("only_in_second"), r.nvars);
}

}  // namespace boolprime
