#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slender {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  unsigned seed = 20240801;
  std::vector<int> only;  // empty = run everything
};

/// Runs the verification suite (nine property batteries over the desk
/// fixtures) and reports one result per criterion. When progress is
/// given, a pass/fail line is printed as each criterion finishes.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& options,
                                            std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace slender
