#pragma once

// Classification of prime ideals of B[x]. Category I ideals contain x and are
// determined by A = {a : 1 + x^a in P}. Category II ideals split by the class
// d of A into the J_A form and the star forms, decided here by bounded
// membership probes.

#include <optional>
#include <string>
#include <vector>

#include "boolprime/errors.hpp"
#include "boolprime/family.hpp"
#include "boolprime/ideals.hpp"
#include "json.hpp"

namespace boolprime {

/// Same as IdealSpec::family; validates the descriptor.
IdealSpec build_family(const FamilyDesc& desc);

enum class DetectOutcome { JA, Star, Inconclusive };

struct BranchDetection {
  DetectOutcome outcome = DetectOutcome::Inconclusive;
  /// Least probe (graded order) found in the ideal.
  std::optional<Poly> witness;
  MembershipVerdict verdict;
};

/// Both a J_A probe and a star probe were found in the ideal.
class BranchConflict : public Error {
 public:
  BranchConflict(Poly ja, Poly star)
      : Error("both branches detected: " + to_string(ja) + " and " + to_string(star)),
        ja_(std::move(ja)),
        star_(std::move(star)) {}
  const Poly& ja_witness() const noexcept { return ja_; }
  const Poly& star_witness() const noexcept { return star_; }

 private:
  Poly ja_;
  Poly star_;
};

/// d = 1. Probes 1 + x^a + x^m (a in A, m > a, m and m - a outside A) for the
/// J_A branch and 1 + x^n + x^(n+a) (n, n + a outside A) for the star branch,
/// all of degree <= D. Throws PreconditionError for category I ideals or A
/// not finite and non-empty; BranchConflict when both probes hit.
BranchDetection detect_branch_d1(const IdealSpec& spec, const PrimeSubset& A, Exp D);

/// d > 1 with d in A and S = {a1, a1 + 1, ...}. Probes 1 + x^d + x^m
/// (m outside A, m != (F+1)d) for J_A and 1 + x^m + x^(m+td) (m outside A,
/// m >= (F+1)d, t >= 1) for the star branch.
BranchDetection detect_branch_dgt1(const IdealSpec& spec, const PrimeSubset& A, Exp D);

enum class Category { I, II };

enum class Branch {
  IA,    // category I: the ideal I_A
  Zero,  // category II with A empty
  JA,
  Star,
};

std::string to_string(Category c);
std::string to_string(Branch b);

struct EvidenceItem {
  std::string claim;
  Poly poly;
  bool member = false;
  friend bool operator==(const EvidenceItem&, const EvidenceItem&) = default;
};

struct ClassificationReport {
  Category category = Category::II;
  PrimeSubset A;
  Nat d = 1;
  Branch branch = Branch::JA;
  std::optional<Nat> big_a;
  /// Star branch only: reduced star polynomials of degree <= bound outside
  /// the base family.
  std::vector<Poly> Q;
  Exp bound = 0;
  /// The descriptor rebuilt from the classification.
  std::optional<FamilyDesc> family;
  /// Membership agrees with `family` on every polynomial of degree <= bound.
  bool reconstruction_equal = false;
  std::vector<EvidenceItem> evidence;
  std::vector<std::string> notes;
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// The input failed the bounded primality search.
class NotPrimeIdeal : public Error {
 public:
  explicit NotPrimeIdeal(PrimalityReport r)
      : Error("ideal is not prime: " + to_string(r.counterexample->f) + " * " +
              to_string(r.counterexample->g) + " lies in it"),
        report_(std::move(r)) {}
  const PrimalityReport& report() const noexcept { return report_; }

 private:
  PrimalityReport report_;
};

/// Neither branch was detected up to the bound; retry with a larger D.
class InconclusiveBranch : public Error {
 public:
  using Error::Error;
};

/// Star polynomials with 1 in the support, degree <= D, in the ideal but not
/// in `base`, reduced greedily in graded order.
std::vector<Poly> recover_q(const IdealSpec& spec, const IdealSpec& base, const PrimeSubset& A, Exp D);

/// Q reduced against the star base of `desc` (empty for other kinds).
std::vector<Poly> reduced_q(const FamilyDesc& desc, Exp D);

/// A is read on [1, 2D]; the primality search runs at D.
ClassificationReport classify(const IdealSpec& spec, Exp D, unsigned workers = 0);

void to_json(nlohmann::json& j, const ClassificationReport& r);
void from_json(const nlohmann::json& j, ClassificationReport& r);

}  // namespace boolprime
