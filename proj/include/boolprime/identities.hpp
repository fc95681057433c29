#pragma once

// Exact checks of the product identities used in the classification. The
// expanded left-hand side is always the ground truth; each right-hand form is
// compared against it and any mismatch is reported as a symmetric difference.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolprime/poly.hpp"
#include "boolprime/subsets.hpp"
#include "json.hpp"

namespace boolprime {

struct IdentityForm {
  std::string name;
  Poly lhs;
  Poly rhs;
  bool equal = false;
  Poly difference;  // Supp(lhs) symmetric-difference Supp(rhs)
  /// Report-only forms do not affect the overall verdict.
  bool required = true;
  friend bool operator==(const IdentityForm&, const IdentityForm&) = default;
};

struct IdentityCheckResult {
  std::string identity;
  nlohmann::json params;
  /// Primary form.
  Poly lhs;
  Poly rhs;
  /// Every required form is equal.
  bool equal = false;
  Poly symmetric_difference;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> k;
  std::vector<IdentityForm> forms;
  friend bool operator==(const IdentityCheckResult&, const IdentityCheckResult&) = default;
};

/// alpha * (2m + 3 alpha - 3) / 2.
std::uint64_t q_closed_form(std::uint64_t alpha, std::uint64_t m);
/// m * alpha + sum_{i=1}^{alpha-1} (alpha + i).
std::uint64_t q_definitional(std::uint64_t alpha, std::uint64_t m);

/// (1+x^r)^s (1+x^s)^s (1+x^(r+s)) = (1+x^r)^(s+1) (1+x^s)^(s+1), 1 <= r <= s.
IdentityCheckResult check_eq_product(Exp r, Exp s);
/// (a+b+c)(ab+bc+ac) = (a+b)(b+c)(a+c).
IdentityCheckResult check_three_term(const Poly& a, const Poly& b, const Poly& c);
/// (1+x^alpha)^m prod_{i<alpha} (1+x^(alpha+i)); requires m - 1 > alpha >= 2.
IdentityCheckResult check_product_rule1(Exp alpha, Exp m);
/// (1+x^(m-a)) times the rule-1 product, alpha = max(A) + 1, a in A,
/// alpha <= m < alpha + a. The grouped form is report-only.
IdentityCheckResult check_product_rule2(const PrimeSubset& A, Exp a, Exp m);
/// (1+x^(m-a)) (1+x^m)^(k-1) times the rule-1 product, a < m < alpha, k the
/// least k with km - a >= alpha. The grouped form is report-only.
IdentityCheckResult check_product_rule3(Exp alpha, Exp a, Exp m);
/// Rule 3 with a = 1.
IdentityCheckResult check_product_rule4(Exp alpha, Exp m);
/// In B[x, y], a, b >= 1:
///   (x^a+y^b+x^p y^q)(x^a y^b+x^(p+a) y^q+x^p y^(q+b)) = (x^a+y^b)(x^a+x^p y^q)(y^b+x^p y^q)
///   (1+x^a y^b+f)(x^a y^b+f+x^a y^b f) = (1+x^a y^b)(1+f)(x^a y^b+f)
IdentityCheckResult check_multivar_identities(Exp a, Exp b, Exp p, Exp q, const Poly& f);

// Parameter sweeps.
std::vector<IdentityCheckResult> sweep_eq_product(Exp max_s);
std::vector<IdentityCheckResult> sweep_product_rule1();
/// Every non-empty prime A inside {1..max_elem}, a in A, alpha <= m < alpha + a.
std::vector<IdentityCheckResult> sweep_product_rule2(Nat max_elem);
/// 3 <= alpha <= max_alpha, 1 <= a < m < alpha.
std::vector<IdentityCheckResult> sweep_product_rule3(Exp max_alpha);
std::vector<IdentityCheckResult> sweep_product_rule4(Exp max_alpha);
/// `trials` random triples with supports inside {0..max_exp}.
std::vector<IdentityCheckResult> sweep_three_term(std::size_t trials, Exp max_exp, std::uint64_t seed);
/// 1 <= a, b <= 3, 0 <= p, q <= 3 against `random_fs` random f plus f = 0.
std::vector<IdentityCheckResult> sweep_multivar(std::size_t random_fs, std::uint64_t seed);

void to_json(nlohmann::json& j, const IdentityCheckResult& r);
void from_json(const nlohmann::json& j, IdentityCheckResult& r);

}  // namespace boolprime
