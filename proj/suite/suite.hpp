#pragma once

// Acceptance battery: ten criteria, each with its own time limit. Criteria
// marked `bounded` are evidence at the stated degree bounds, not proofs.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "boolprime/family.hpp"
#include "json.hpp"

namespace boolprime::suite {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool bounded = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0: no limit
  std::string summary;
  std::vector<std::string> failures;
  nlohmann::json data = nlohmann::json::object();
};

struct SuiteOptions {
  std::uint64_t seed = 20240607;
  unsigned workers = 0;
};

constexpr int kCriterionCount = 10;

struct ClassifyFixture {
  std::string label;
  FamilyDesc desc;
  std::string category;
  std::string branch;
  /// 6 when d = 1, 12 when d > 1.
  Exp bound = 6;
};

/// Families spanning every category II branch, plus category I.
std::vector<ClassifyFixture> classify_fixtures();
CriterionResult run_criterion(int id, const SuiteOptions& opts);
std::vector<CriterionResult> run_all(const SuiteOptions& opts);

/// One line: "PASS  [1] name ... (0.01 s / limit 1 s)".
std::string format_line(const CriterionResult& r);
void to_json(nlohmann::json& j, const CriterionResult& r);

}  // namespace boolprime::suite
