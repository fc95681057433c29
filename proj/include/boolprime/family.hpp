#pragma once

// Symbolic ideal families. Each descriptor stands for an infinitely generated
// ideal and can list its generators of total degree <= any bound.
//
//   CatI(A)        <x, {1 + x^a : a in A}>
//   JA(A)          <{1 + x^a + x^m : a in A, m >= 0}>
//   StarD1(A, Q)   <{1 + x^m + x^(m+a) : a in A, m >= 0} u Q>,       A finite
//   StarDgt1(A, Q) StarD1 generators u {1 + x^a + x^m : m >= 1, a in A with
//                  a < d or a >= (F+1)d or d does not divide a} u Q, d in A
//   CatIN(A)       <x1, ..., xn, {1 + X^a : a in A}>
//   P1             <{x^a + y^b + x^c y^d : a, b >= 1, c, d >= 0, (c, d) != (0, 0)}>
//   P2             <{x^a + y^b : a, b >= 1} u {1 + x^i y^q + x^p y^j : i < p, j < q}>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "boolprime/errors.hpp"
#include "boolprime/poly.hpp"
#include "boolprime/subset_n.hpp"
#include "boolprime/subsets.hpp"
#include "json.hpp"

namespace boolprime {

namespace family {

struct CatI {
  PrimeSubset A;
  friend bool operator==(const CatI&, const CatI&) = default;
};
struct JA {
  PrimeSubset A;
  friend bool operator==(const JA&, const JA&) = default;
};
struct StarD1 {
  PrimeSubset A;
  std::vector<Poly> Q;
  friend bool operator==(const StarD1&, const StarD1&) = default;
};
struct StarDgt1 {
  PrimeSubset A;
  std::vector<Poly> Q;
  friend bool operator==(const StarDgt1&, const StarDgt1&) = default;
};
struct CatIN {
  PrimeSubsetN A;
  friend bool operator==(const CatIN&, const CatIN&) = default;
};
struct P1 {
  /// Admit (c, d) = (0, 0), i.e. the generators 1 + x^a + y^b.
  bool allow_constant = false;
  friend bool operator==(const P1&, const P1&) = default;
};
struct P2 {
  friend bool operator==(const P2&, const P2&) = default;
};

}  // namespace family

using FamilyDesc = std::variant<family::CatI, family::JA, family::StarD1, family::StarDgt1,
                                family::CatIN, family::P1, family::P2>;

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

std::size_t nvars(const FamilyDesc& desc);
/// Short kind tag used in text and JSON: "CatI", "JA", "StarD1", ...
std::string kind_name(const FamilyDesc& desc);

/// Throws InvalidFamily when a descriptor invariant fails.
void validate(const FamilyDesc& desc);

/// Every generator of total degree <= bound, canonical, duplicate-free and
/// sorted in the graded order. Monotone in bound.
std::vector<Poly> family_generators(const FamilyDesc& desc, Exp bound);

// ---------------------------------------------------------------------------
// Property star

/// How the constant term of f = 1 + x^m1 + ... + x^mr enters clause (iii).
enum class StarReading {
  IncludeConstant,  // 0 counts as an exponent m_0 for clause (iii) (default)
  ExponentsOnly,    // only m1..mr take part
};

struct StarCheck {
  bool holds = false;
  /// 1, 2 or 3 when a clause fails; the first failing clause is reported.
  std::optional<int> failed_clause;
};

/// Throws PreconditionError when 1 is not in Supp(f) or f has no other term.
StarCheck property_star(const Poly& f, const PrimeSubset& A,
                        StarReading reading = StarReading::IncludeConstant);

/// Base part of a star family (Q dropped), used to recover Q.
FamilyDesc star_base(const FamilyDesc& desc);

namespace family {
void to_json(nlohmann::json& j, const FamilyDesc& desc);
void from_json(const nlohmann::json& j, FamilyDesc& desc);
}  // namespace family

}  // namespace boolprime
