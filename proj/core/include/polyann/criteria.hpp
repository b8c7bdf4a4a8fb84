#pragma once

#include <string>
#include <vector>

namespace polyann {

// One entry of the acceptance battery. `detail` records the worst measured
// quantity (deterministic text, so serialized reports are byte-stable).
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the full acceptance battery, ids 1..12 in order. Every check uses
// fixed seeds; a repeated run produces identical results and bytes. Entry 12
// covers report enumeration plus in-process serialization determinism; the
// separate-process byte comparison belongs to callers that own two runs.
std::vector<CriterionResult> run_acceptance_criteria();

// JSON array of {id, name, passed, detail}.
std::string criteria_to_json(const std::vector<CriterionResult>& results);

}  // namespace polyann
