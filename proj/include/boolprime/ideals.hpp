#pragma once

// Ideals of B[x1..xn]. Since addition is idempotent, f lies in <G> exactly
// when Supp(f) is the union of the translates X^k * g (g in G) whose support
// fits inside Supp(f). A translate fitting inside f has total degree at most
// deg f, so generators up to deg f decide membership exactly.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boolprime/dense.hpp"
#include "boolprime/family.hpp"
#include "boolprime/poly.hpp"
#include "boolprime/subsets.hpp"
#include "json.hpp"

namespace boolprime {

/// Ideals described by a membership predicate instead of generators.
enum class Characterization {
  /// f = 0, or x^(a-1) in Supp(f) where x^a is the leading monomial.
  LeadingPair,
  /// The set-difference description of J_A: nonzero f is a member iff
  /// f = x^k f' with f'(0) = 1 and Supp(f') meeting A.
  JASetDifference,
};

class IdealSpec {
 public:
  struct Explicit {
    std::size_t nvars = 1;
    std::vector<Poly> generators;
    friend bool operator==(const Explicit&, const Explicit&) = default;
  };
  struct Family {
    FamilyDesc desc;
    friend bool operator==(const Family&, const Family&) = default;
  };
  struct Characterized {
    Characterization kind;
    PrimeSubset A;  // JASetDifference only
    friend bool operator==(const Characterized&, const Characterized&) = default;
  };

  /// Throws PreconditionError on a zero generator or mixed variable counts.
  /// Generators are canonicalized (sorted, deduplicated).
  static IdealSpec explicit_ideal(std::vector<Poly> generators, std::size_t nvars = 0);
  /// Validates the descriptor (InvalidFamily).
  static IdealSpec family(FamilyDesc desc);
  static IdealSpec leading_pair();
  static IdealSpec ja_set_difference(PrimeSubset A);

  std::size_t nvars() const;
  const std::variant<Explicit, Family, Characterized>& rep() const noexcept { return rep_; }
  bool has_generators() const noexcept { return !std::holds_alternative<Characterized>(rep_); }

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;

 private:
  explicit IdealSpec(std::variant<Explicit, Family, Characterized> rep) : rep_(std::move(rep)) {}
  std::variant<Explicit, Family, Characterized> rep_;
};

/// Every generator of total degree <= bound (empty for characterized specs).
std::vector<Poly> enumerate_generators(const IdealSpec& spec, Exp bound);

struct CoverTerm {
  Poly generator;
  std::vector<Exp> shift;
  friend bool operator==(const CoverTerm&, const CoverTerm&) = default;
};

struct MembershipVerdict {
  bool is_member = false;
  /// Translates whose union is Supp(f); empty for 0 and for characterized specs.
  std::vector<CoverTerm> cover;
  friend bool operator==(const MembershipVerdict&, const MembershipVerdict&) = default;
};

/// Membership engine for one spec at a fixed total-degree bound. Generators
/// are enumerated once and reduced: a generator already covered by smaller
/// ones is dropped. Safe for concurrent reads.
class IdealView {
 public:
  IdealView(const IdealSpec& spec, Exp bound);

  const IdealSpec& spec() const noexcept { return spec_; }
  Exp bound() const noexcept { return bound_; }
  std::size_t nvars() const noexcept { return packing_.nvars(); }
  const Packing& packing() const noexcept { return packing_; }
  /// Reduced generating set up to the bound.
  std::vector<Poly> generators() const;

  /// Throws PreconditionError when f does not fit the bound.
  bool contains(const Poly& f) const;
  MembershipVerdict verdict(const Poly& f) const;
  /// f packed with packing(); bits outside the box must be clear.
  bool contains_dense(const DenseSet& f) const;

 private:
  struct Gen {
    Poly poly;
    std::vector<std::size_t> terms;  // packed indices, ascending
    DenseSet shifts;                 // admissible shift positions
  };
  bool anchored(const DenseSet& f, std::size_t bit, bool low, std::size_t ngens) const;
  template <std::size_t NW>
  bool covers_fixed(const DenseSet& f, std::size_t ngens) const;
  bool covers(const DenseSet& f, std::size_t ngens, DenseSet* covered) const;
  bool predicate(const Poly& f) const;
  void check_fits(const Poly& f) const;

  IdealSpec spec_;
  Exp bound_;
  Packing packing_;
  std::vector<Gen> gens_;
};

MembershipVerdict member(const Poly& f, const IdealSpec& spec);

/// {a <= bound : 1 + x^a in the ideal}; univariate specs only.
std::vector<Nat> extract_A(const IdealSpec& spec, Nat bound);
/// Multivariate analogue: vectors a with 0 < |a| and every a_i <= box.
std::vector<ExpVec> extract_A_n(const IdealSpec& spec, Exp box);

/// x (every variable) lies in the ideal.
bool contains_x(const IdealSpec& spec);

struct Counterexample {
  Poly f;
  Poly g;
  Poly product;
  MembershipVerdict product_verdict;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct PrimalityReport {
  std::size_t nvars = 1;
  Exp bound = 0;
  /// Empty when no counterexample exists up to the bound.
  std::optional<Counterexample> counterexample;
  std::size_t nonmembers = 0;
  std::size_t pairs_checked = 0;

  bool prime_up_to_bound() const noexcept { return !counterexample.has_value(); }
  friend bool operator==(const PrimalityReport&, const PrimalityReport&) = default;
};

/// Scans pairs of nonzero polynomials with total degree <= D, in order of
/// (deg f + deg g, supports lexicographically, f before g), and reports the
/// least pair with f, g outside and f*g inside the ideal. Products are decided
/// at bound 2D. The result does not depend on `workers` (0 = hardware).
PrimalityReport primality_search(const IdealSpec& spec, Exp D, unsigned workers = 0);

struct EqualityReport {
  std::size_t nvars = 1;
  Exp bound = 0;
  bool equal = true;
  /// Least polynomial (graded order) in the first ideal but not the second.
  std::optional<Poly> only_in_first;
  std::optional<Poly> only_in_second;
  friend bool operator==(const EqualityReport&, const EqualityReport&) = default;
};

/// Compares membership on every nonzero polynomial of total degree <= D.
EqualityReport equal_up_to(const IdealSpec& a, const IdealSpec& b, Exp D);

/// Monomials of total degree <= D in n variables, in lex order.
std::vector<ExpVec> simplex_monomials(std::size_t nvars, Exp D);

void to_json(nlohmann::json& j, const IdealSpec& s);
void from_json(const nlohmann::json& j, IdealSpec& s);
/// Poly-valued fields are written as text; `nvars` tells the reader how to parse.
nlohmann::json verdict_to_json(const MembershipVerdict& v, std::size_t nvars);
MembershipVerdict verdict_from_json(const nlohmann::json& j, std::size_t nvars);
void to_json(nlohmann::json& j, const PrimalityReport& r);
void from_json(const nlohmann::json& j, PrimalityReport& r);
void to_json(nlohmann::json& j, const EqualityReport& r);
void from_json(const nlohmann::json& j, EqualityReport& r);

}  // namespace boolprime
