#pragma once

// Prime subsets of N = {1, 2, 3, ...} and the numerical semigroups that index
// them. A set A is prime when a + b in A forces a in A or b in A; equivalently
// N - A is closed under addition. Finite prime sets have a cofinite complement
// (class d = 1); infinite ones are described by N - A = d * S for a numerical
// semigroup S and d >= 2.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "boolprime/errors.hpp"
#include "json.hpp"

namespace boolprime {

using Nat = std::uint32_t;

/// A violating pair (a, b): a + b in A but neither a nor b in A.
using Violation = std::pair<Nat, Nat>;

class NotPrimeSubset : public Error {
 public:
  explicit NotPrimeSubset(Violation v)
      : Error("not a prime subset: " + std::to_string(v.first) + " + " + std::to_string(v.second) +
              " lies in the set but neither summand does"),
        violation_(v) {}
  Violation violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

class NumericalSemigroup {
 public:
  /// Reduces to the minimal generating set; throws PreconditionError when the
  /// list is empty, contains 0, or has gcd != 1.
  static NumericalSemigroup from_generators(std::vector<Nat> gens);

  const std::vector<Nat>& generators() const noexcept { return gens_; }
  /// Largest positive integer outside S; 0 when S contains 1.
  Nat frobenius() const noexcept { return frobenius_; }
  Nat multiplicity() const noexcept { return gens_.front(); }
  bool contains(std::uint64_t n) const;
  /// Whether S = {a1, a1 + 1, a1 + 2, ...}, i.e. frobenius = multiplicity - 1.
  bool is_interval_form() const noexcept { return frobenius_ + 1 == gens_.front(); }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }

 private:
  std::vector<Nat> gens_;
  Nat frobenius_ = 0;
  std::vector<bool> table_;  // membership for 0..frobenius
};

/// Frobenius number by shortest paths over residues of the smallest generator.
/// Throws PreconditionError when gcd(gens) != 1.
Nat frobenius(std::span<const Nat> gens);

/// Minimal generators of the additive closure of `elems` (positive integers).
std::vector<Nat> minimal_generators(std::span<const Nat> elems);

class PrimeSubset {
 public:
  struct Finite {
    std::vector<Nat> elements;
    friend bool operator==(const Finite&, const Finite&) = default;
  };
  struct Cofinite {
    Nat d;
    NumericalSemigroup semigroup;
    friend bool operator==(const Cofinite&, const Cofinite&) = default;
  };

  PrimeSubset() : rep_(Finite{}) {}

  /// Validates primality; throws NotPrimeSubset with the first violation.
  static PrimeSubset finite(std::vector<Nat> elements);
  /// N - A = d * S. Requires d >= 2.
  static PrimeSubset cofinite(Nat d, NumericalSemigroup s);
  static PrimeSubset cofinite(Nat d, std::vector<Nat> semigroup_gens) {
    return cofinite(d, NumericalSemigroup::from_generators(std::move(semigroup_gens)));
  }
  /// Recover a prime subset from its intersection with [1, bound]. The
  /// complement's minimal generators decide the class; a d > 1 reading is
  /// accepted only when it reproduces the prefix exactly. Throws
  /// NotPrimeSubset or PreconditionError otherwise.
  static PrimeSubset from_prefix(std::span<const Nat> prefix, Nat bound);

  bool is_finite() const noexcept { return std::holds_alternative<Finite>(rep_); }
  bool empty() const noexcept { return is_finite() && std::get<Finite>(rep_).elements.empty(); }
  const Finite* as_finite() const noexcept { return std::get_if<Finite>(&rep_); }
  const Cofinite* as_cofinite() const noexcept { return std::get_if<Cofinite>(&rep_); }

  bool contains(std::uint64_t a) const;
  /// Elements of A in [1, bound], ascending.
  std::vector<Nat> elements_up_to(Nat bound) const;
  /// gcd of the complement's minimal generators (1 for finite A).
  Nat class_d() const;

  friend bool operator==(const PrimeSubset&, const PrimeSubset&) = default;

 private:
  explicit PrimeSubset(std::variant<Finite, Cofinite> rep) : rep_(std::move(rep)) {}
  std::variant<Finite, Cofinite> rep_;
};

struct PrimeCheck {
  bool prime = true;
  std::optional<Violation> violation;
};

/// Complete check of a raw finite set: every sum landing in the set is split.
PrimeCheck is_prime_subset(std::span<const Nat> elements);
/// Check for a described subset over sums a + b <= check_bound.
PrimeCheck is_prime_subset(const PrimeSubset& a, Nat check_bound);

/// Minimal generators of the submonoid N - A for finite prime A.
std::vector<Nat> complement_generators(std::span<const Nat> elements);

struct ClassParams {
  Nat d = 1;
  std::optional<Nat> alpha;     // max(A) + 1, d = 1 only
  std::optional<Nat> big_a;     // (F + 1) * d, d > 1 only
  std::optional<Nat> frobenius; // of S, d > 1 only
  std::optional<NumericalSemigroup> semigroup;
};

ClassParams class_params(const PrimeSubset& a);

/// "1,2,5" (braces allowed); positions in errors are shifted by `offset`.
std::vector<Nat> parse_nat_list(std::string_view text, std::size_t offset = 0);

/// CLI form: "1,2,5", "" / "{}" for the empty set, or "d=2;S=2,3".
PrimeSubset parse_prime_subset(std::string_view text);
std::string to_string(const PrimeSubset& a);

void to_json(nlohmann::json& j, const PrimeSubset& a);
void from_json(const nlohmann::json& j, PrimeSubset& a);
void to_json(nlohmann::json& j, const ClassParams& p);

}  // namespace boolprime
