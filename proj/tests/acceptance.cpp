// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance [criterion ids...]

#include <cstdlib>
#include <iostream>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
  namespace s = boolprime::suite;
  s::SuiteOptions opts;
  if (const char* w = std::getenv("BOOLPRIME_WORKERS")) opts.workers = static_cast<unsigned>(std::stoul(w));
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::stoi(argv[i]));
  if (ids.empty()) {
    for (int i = 1; i <= s::kCriterionCount; ++i) ids.push_back(i);
  }
  int failed = 0;
  for (int id : ids) {
    const s::CriterionResult r = s::run_criterion(id, opts);
    std::cout << s::format_line(r) << std::endl;
    if (!r.passed) {
      ++failed;
      for (const auto& f : r.failures) std::cout << "    " << f << '\n';
    }
  }
  std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
