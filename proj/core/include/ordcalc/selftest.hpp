#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ordcalc {

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelfTestReport {
  std::vector<CriterionResult> criteria;
  bool ok = false;

  nlohmann::json to_json() const;
};

// The embedded regression suite behind `ordcalc selftest` and the acceptance
// runner: pinned values, randomized property suites with fixed seeds, and
// the brute-force oracle comparison. Deterministic.
SelfTestReport run_selftest();

}  // namespace ordcalc
