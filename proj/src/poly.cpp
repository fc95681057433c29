#include "boolprime/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "boolprime/dense.hpp"
#include "boolprime/errors.hpp"

namespace boolprime {
namespace {

// Dense products are used while the packed box stays below this many bits.
constexpr std::size_t kDenseLimitBits = std::size_t{1} << 22;

void require_same_vars(const Poly& f, const Poly& g) {
  if (f.nvars() != g.nvars()) throw VariableMismatch(f.nvars(), g.nvars());
}

Exp max_coordinate(const Poly& f) {
  Exp m = 0;
  for (Exp e : f.flat()) m = std::max(m, e);
  return m;
}

}  // namespace

Poly Poly::zero(std::size_t nvars) {
  if (nvars == 0) throw PreconditionError("nvars must be positive");
  return Poly(nvars, {});
}

Poly Poly::one(std::size_t nvars) {
  if (nvars == 0) throw PreconditionError("nvars must be positive");
  return Poly(nvars, std::vector<Exp>(nvars, 0));
}

Poly Poly::from_exponents(std::vector<Exp> exps) {
  Poly p(1, std::move(exps));
  p.canonicalize();
  return p;
}

Poly Poly::from_terms(std::size_t nvars, const std::vector<std::vector<Exp>>& terms) {
  if (nvars == 0) throw PreconditionError("nvars must be positive");
  std::vector<Exp> flat;
  flat.reserve(terms.size() * nvars);
  for (const auto& t : terms) {
    if (t.size() != nvars) throw VariableMismatch(nvars, t.size());
    flat.insert(flat.end(), t.begin(), t.end());
  }
  return from_flat(nvars, std::move(flat));
}

Poly Poly::from_flat(std::size_t nvars, std::vector<Exp> flat) {
  if (nvars == 0) throw PreconditionError("nvars must be positive");
  if (flat.size() % nvars != 0) throw PreconditionError("flat exponent array has a partial term");
  Poly p(nvars, std::move(flat));
  p.canonicalize();
  return p;
}

Poly Poly::monomial(std::span<const Exp> exps) {
  return Poly(exps.size(), std::vector<Exp>(exps.begin(), exps.end()));
}

void Poly::canonicalize() {
  if (nvars_ == 1) {
    std::sort(data_.begin(), data_.end());
    data_.erase(std::unique(data_.begin(), data_.end()), data_.end());
    return;
  }
  const std::size_t n = nvars_;
  std::vector<std::vector<Exp>> terms;
  terms.reserve(data_.size() / n);
  for (std::size_t i = 0; i < data_.size(); i += n) {
    terms.emplace_back(data_.begin() + static_cast<std::ptrdiff_t>(i),
                       data_.begin() + static_cast<std::ptrdiff_t>(i + n));
  }
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  data_.clear();
  for (const auto& t : terms) data_.insert(data_.end(), t.begin(), t.end());
}

std::span<const Exp> Poly::support() const {
  if (nvars_ != 1) throw VariableMismatch(nvars_, 1);
  return data_;
}

bool Poly::contains(std::span<const Exp> exps) const {
  if (exps.size() != nvars_) throw VariableMismatch(nvars_, exps.size());
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto t = term(mid);
    const auto c = std::lexicographical_compare_three_way(t.begin(), t.end(), exps.begin(), exps.end());
    if (c == 0) return true;
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return false;
}

bool Poly::has_constant() const {
  if (is_zero()) return false;
  // The all-zero vector is lexicographically smallest.
  const auto t = term(0);
  return std::all_of(t.begin(), t.end(), [](Exp e) { return e == 0; });
}

Exp Poly::total_degree() const {
  if (is_zero()) throw ZeroPolynomial();
  Exp best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    Exp s = 0;
    for (Exp e : term(i)) s += e;
    best = std::max(best, s);
  }
  return best;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
  if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                b.data_.end());
}

bool support_lex_less(const Poly& a, const Poly& b) {
  const auto fa = a.flat();
  const auto fb = b.flat();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

Poly add(const Poly& f, const Poly& g) {
  require_same_vars(f, g);
  std::vector<Exp> flat(f.flat().begin(), f.flat().end());
  flat.insert(flat.end(), g.flat().begin(), g.flat().end());
  return Poly::from_flat(f.nvars(), std::move(flat));
}

Poly mul(const Poly& f, const Poly& g) {
  require_same_vars(f, g);
  const std::size_t n = f.nvars();
  if (f.is_zero() || g.is_zero()) return Poly::zero(n);

  const Exp box = max_coordinate(f) + max_coordinate(g);
  std::size_t bits = 1;
  bool dense = true;
  for (std::size_t i = 0; i < n && dense; ++i) {
    bits *= static_cast<std::size_t>(box) + 1;
    dense = bits <= kDenseLimitBits;
  }
  if (dense) {
    const Packing p(n, box);
    const auto& [small, large] = f.size() <= g.size() ? std::pair{&f, &g} : std::pair{&g, &f};
    const auto terms = packed_indices(*small, p);
    const DenseSet prod = minkowski(pack(*large, p), terms, p.nwords());
    return unpack(prod, p);
  }

  std::vector<Exp> flat;
  flat.reserve(f.size() * g.size() * n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto a = f.term(i);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto b = g.term(j);
      for (std::size_t k = 0; k < n; ++k) flat.push_back(a[k] + b[k]);
    }
  }
  return Poly::from_flat(n, std::move(flat));
}

Poly pow(const Poly& f, std::uint64_t k) {
  Poly result = Poly::one(f.nvars());
  Poly base = f;
  while (k > 0) {
    if ((k & 1U) != 0) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Poly shift(const Poly& f, std::span<const Exp> by) {
  if (by.size() != f.nvars()) throw VariableMismatch(f.nvars(), by.size());
  std::vector<Exp> flat(f.flat().begin(), f.flat().end());
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += by[i % by.size()];
  // Translation preserves lexicographic order and distinctness.
  return Poly::from_flat(f.nvars(), std::move(flat));
}

Poly shift(const Poly& f, Exp by) { return shift(f, std::span<const Exp>(&by, 1)); }

Exp degree(const Poly& f) {
  const auto s = f.support();
  if (s.empty()) throw ZeroPolynomial();
  return s.back();
}

bool has_subleading(const Poly& f) {
  const Exp d = degree(f);
  return d > 0 && f.contains(d - 1);
}

Poly symmetric_difference(const Poly& f, const Poly& g) {
  require_same_vars(f, g);
  const std::size_t n = f.nvars();
  std::vector<Exp> flat;
  std::size_t i = 0;
  std::size_t j = 0;
  auto push = [&](std::span<const Exp> t) { flat.insert(flat.end(), t.begin(), t.end()); };
  while (i < f.size() || j < g.size()) {
    if (j >= g.size()) {
      push(f.term(i++));
      continue;
    }
    if (i >= f.size()) {
      push(g.term(j++));
      continue;
    }
    const auto a = f.term(i);
    const auto b = g.term(j);
    const auto c = std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    if (c < 0) {
      push(a);
      ++i;
    } else if (c > 0) {
      push(b);
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return Poly::from_flat(n, std::move(flat));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  Poly parse() {
    std::vector<Exp> flat;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    do {
      skip_ws();
      if (peek() == '0' && !is_digit_at(pos_ + 1)) {
        ++pos_;
      } else {
        auto t = parse_term();
        flat.insert(flat.end(), t.begin(), t.end());
      }
      skip_ws();
    } while (consume('+'));
    if (!at_end()) throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    return Poly::from_flat(nvars_, std::move(flat));
  }

 private:
  std::vector<Exp> parse_term() {
    std::vector<Exp> exps(nvars_, 0);
    do {
      skip_ws();
      const std::size_t start = pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const auto c = parse_number();
        if (c != 1) throw ParseError("coefficients must be 0 or 1", start);
        continue;
      }
      const std::size_t var = parse_variable();
      skip_ws();
      Exp power = 1;
      if (consume('^')) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
        power = static_cast<Exp>(parse_number());
      }
      exps[var] += power;
      skip_ws();
    } while (consume('*'));
    return exps;
  }

  std::size_t parse_variable() {
    const std::size_t start = pos_;
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const auto idx = parse_number();
        if (idx < 1 || idx > nvars_) throw ParseError("variable index out of range", start);
        return static_cast<std::size_t>(idx - 1);
      }
      return 0;
    }
    if ((c == 'y' || c == 'z') && nvars_ >= 2 && nvars_ <= 3) {
      const std::size_t idx = c == 'y' ? 1 : 2;
      if (idx >= nvars_) throw ParseError("variable out of range", start);
      ++pos_;
      return idx;
    }
    if (at_end()) throw ParseError("expected a term", start);
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  std::uint64_t parse_number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 0xFFFFFFFFull) throw ParseError("number too large", start);
      ++pos_;
    }
    return v;
  }

  bool is_digit_at(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

std::string monomial_text(std::span<const Exp> t) {
  std::string out;
  const bool uni = t.size() == 1;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    if (!uni) out += std::to_string(k + 1);
    if (t[k] != 1) out += '^' + std::to_string(t[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Poly parse_poly(std::string_view text, std::size_t nvars) {
  if (nvars == 0) throw PreconditionError("nvars must be positive");
  return PolyParser(text, nvars).parse();
}

std::vector<Poly> parse_poly_list(std::string_view text, std::size_t nvars) {
  std::vector<Poly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    try {
      out.push_back(parse_poly(text.substr(start, end - start), nvars));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in list item: ") + e.what(), start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += '+';
    out += monomial_text(f.term(i));
  }
  return out;
}

void to_json(nlohmann::json& j, const Poly& f) {
  j = nlohmann::json::object();
  j["nvars"] = f.nvars();
  if (f.nvars() == 1) {
    j["support"] = std::vector<Exp>(f.flat().begin(), f.flat().end());
  } else {
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto t = f.term(i);
      arr.push_back(std::vector<Exp>(t.begin(), t.end()));
    }
    j["support"] = std::move(arr);
  }
}

void from_json(const nlohmann::json& j, Poly& f) {
  if (j.is_string()) {
    f = parse_poly(j.get<std::string>());
    return;
  }
  const std::size_t n = j.value("nvars", std::size_t{1});
  const auto& s = j.at("support");
  if (n == 1) {
    std::vector<Exp> exps;
    for (const auto& e : s) exps.push_back(e.is_array() ? e.at(0).get<Exp>() : e.get<Exp>());
    f = Poly::from_exponents(std::move(exps));
  } else {
    f = Poly::from_terms(n, s.get<std::vector<std::vector<Exp>>>());
  }
}

}  // namespace boolprime
