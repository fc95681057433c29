#pragma once

// Polynomials over the Boolean semifield B = {0, 1} with 1 + 1 = 1.
//
// A polynomial is determined by its support, so a Poly stores the sorted,
// duplicate-free list of exponent vectors. Addition is support union and
// multiplication is the Minkowski sum of supports. Exponent vectors are kept
// in one flat array (nvars entries per term) ordered lexicographically.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolprime/errors.hpp"
#include "json.hpp"

namespace boolprime {

using Exp = std::uint32_t;

class Poly {
 public:
  /// The zero polynomial in one variable.
  Poly() = default;

  static Poly zero(std::size_t nvars = 1);
  static Poly one(std::size_t nvars = 1);
  /// Univariate polynomial with the given exponents (any order, duplicates ok).
  static Poly from_exponents(std::vector<Exp> exps);
  static Poly from_exponents(std::initializer_list<Exp> exps) {
    return from_exponents(std::vector<Exp>(exps));
  }
  /// Polynomial in `nvars` variables from a list of exponent vectors.
  static Poly from_terms(std::size_t nvars, const std::vector<std::vector<Exp>>& terms);
  /// Same, from a flat array of terms*nvars entries; canonicalizes.
  static Poly from_flat(std::size_t nvars, std::vector<Exp> flat);
  static Poly monomial(std::span<const Exp> exps);
  static Poly x_pow(Exp k) { return from_exponents({k}); }

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return data_.size() / nvars_; }
  bool is_zero() const noexcept { return data_.empty(); }
  bool is_univariate() const noexcept { return nvars_ == 1; }

  /// Exponent vector of the i-th term in canonical order.
  std::span<const Exp> term(std::size_t i) const {
    return {data_.data() + i * nvars_, nvars_};
  }
  /// The flat exponent array; for univariate polynomials this is the support.
  std::span<const Exp> flat() const noexcept { return data_; }
  /// Univariate support; throws VariableMismatch when nvars != 1.
  std::span<const Exp> support() const;

  bool contains(std::span<const Exp> exps) const;
  bool contains(Exp e) const { return contains(std::span<const Exp>(&e, 1)); }
  /// The term 1 (all-zero exponent vector) is present.
  bool has_constant() const;

  /// Largest total degree over the support; throws ZeroPolynomial on 0.
  Exp total_degree() const;

  friend bool operator==(const Poly&, const Poly&) = default;
  /// Graded order: total degree first, then lexicographic on supports.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  Poly(std::size_t nvars, std::vector<Exp> flat) : nvars_(nvars), data_(std::move(flat)) {}
  void canonicalize();

  std::size_t nvars_ = 1;
  std::vector<Exp> data_;
};

/// Lexicographic comparison of the sorted supports, ignoring degree.
bool support_lex_less(const Poly& a, const Poly& b);

Poly add(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
Poly pow(const Poly& f, std::uint64_t k);
/// x^shift * f for univariate f; X^shift * f in general.
Poly shift(const Poly& f, std::span<const Exp> by);
Poly shift(const Poly& f, Exp by);

inline Poly operator+(const Poly& f, const Poly& g) { return add(f, g); }
inline Poly operator*(const Poly& f, const Poly& g) { return mul(f, g); }

/// Degree of a univariate polynomial; ZeroPolynomial on 0.
Exp degree(const Poly& f);
/// Whether x^(deg f - 1) is in the support (false for constants).
bool has_subleading(const Poly& f);

/// Support of (f symmetric-difference g).
Poly symmetric_difference(const Poly& f, const Poly& g);

// Text form: terms joined by '+'; "1", "x", "x^k"; multivariate "x1^2*x2".
// For nvars <= 3 the letters x, y, z are accepted as x1, x2, x3.
Poly parse_poly(std::string_view text, std::size_t nvars = 1);
std::vector<Poly> parse_poly_list(std::string_view text, std::size_t nvars = 1);
std::string to_string(const Poly& f);

void to_json(nlohmann::json& j, const Poly& f);
void from_json(const nlohmann::json& j, Poly& f);

}  // namespace boolprime
