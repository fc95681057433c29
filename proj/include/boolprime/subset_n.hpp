#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolprime/poly.hpp"
#include "json.hpp"

namespace boolprime {

using ExpVec = std::vector<Exp>;

/// Which vectors may appear in a decomposition a + b when testing primality
/// of a subset of N^n.
enum class SubsetReading {
  NonNegativeNonZero,  // coordinates >= 0, not all zero (default)
  AllPositive,         // every coordinate >= 1
};

/// A finite subset of N^n given by explicit exponent vectors.
class PrimeSubsetN {
 public:
  PrimeSubsetN() = default;
  /// Sorts and dedupes; throws PreconditionError on wrong arity or the zero vector.
  PrimeSubsetN(std::size_t nvars, std::vector<ExpVec> elements);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<ExpVec>& elements() const noexcept { return elements_; }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const ExpVec& v) const;

  friend bool operator==(const PrimeSubsetN&, const PrimeSubsetN&) = default;

 private:
  std::size_t nvars_ = 2;
  std::vector<ExpVec> elements_;
};

/// "(1,0);(0,1)" or "{}" for the empty set.
PrimeSubsetN parse_prime_subset_n(std::string_view text, std::size_t nvars);
std::string to_string(const PrimeSubsetN& a);

void to_json(nlohmann::json& j, const PrimeSubsetN& a);
void from_json(const nlohmann::json& j, PrimeSubsetN& a);

}  // namespace boolprime
