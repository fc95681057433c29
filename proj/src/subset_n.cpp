#include "boolprime/subset_n.hpp"

#include <algorithm>
#include <cctype>

#include "boolprime/errors.hpp"

namespace boolprime {

PrimeSubsetN::PrimeSubsetN(std::size_t nvars, std::vector<ExpVec> elements)
    : nvars_(nvars), elements_(std::move(elements)) {
  if (nvars_ == 0) throw PreconditionError("subset of N^0");
  for (const auto& v : elements_) {
    if (v.size() != nvars_) throw PreconditionError("exponent vector has wrong arity");
    if (std::all_of(v.begin(), v.end(), [](Exp e) { return e == 0; })) {
      throw PreconditionError("the zero vector is not allowed in a subset of N^n");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PrimeSubsetN::contains(const ExpVec& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

PrimeSubsetN parse_prime_subset_n(std::string_view text, std::size_t nvars) {
  std::vector<ExpVec> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) return PrimeSubsetN(nvars, {});
  if (text.substr(i) == "{}") return PrimeSubsetN(nvars, {});
  while (true) {
    skip();
    if (i >= text.size() || text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    ExpVec v;
    while (true) {
      skip();
      const std::size_t start = i;
      std::uint64_t n = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        n = n * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (n > 0xffffffffULL) throw ParseError("exponent too large", start);
        ++i;
      }
      if (i == start) throw ParseError("expected a number", i);
      v.push_back(static_cast<Exp>(n));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ')'", i);
    }
    if (v.size() != nvars) throw ParseError("vector has " + std::to_string(v.size()) + " coordinates", i);
    out.push_back(std::move(v));
    skip();
    if (i == text.size()) break;
    if (text[i] != ';') throw ParseError("expected ';'", i);
    ++i;
  }
  try {
    return PrimeSubsetN(nvars, std::move(out));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string to_string(const PrimeSubsetN& a) {
  if (a.empty()) return "{}";
  std::string s;
  for (std::size_t k = 0; k < a.elements().size(); ++k) {
    if (k != 0) s += ';';
    s += '(';
    const auto& v = a.elements()[k];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) s += ',';
      s += std::to_string(v[i]);
    }
    s += ')';
  }
  return s;
}

void to_json(nlohmann::json& j, const PrimeSubsetN& a) {
  j = nlohmann::json{{"nvars", a.nvars()}, {"elements", a.elements()}};
}

void from_json(const nlohmann::json& j, PrimeSubsetN& a) {
  a = PrimeSubsetN(j.at("nvars").get<std::size_t>(), j.at("elements").get<std::vector<ExpVec>>());
}

}  // namespace boolprime
