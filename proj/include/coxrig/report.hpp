#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace coxrig {

// One machine-checked claim. `ref` names the underlying fact in words; ids
// are unique within a run and reports are sorted by id, so two runs differ
// only in elapsed_ms.
struct ClaimReport {
  std::string claim_id;
  std::string ref;
  bool pass = false;
  bool skipped = false;
  std::string details;
  long long elapsed_ms = 0;

  std::string status() const { return skipped ? "skipped" : (pass ? "pass" : "fail"); }
};

inline bool all_pass(const std::vector<ClaimReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const ClaimReport& r) { return r.pass || r.skipped; });
}

inline void sort_reports(std::vector<ClaimReport>& reports) {
  std::sort(reports.begin(), reports.end(),
            [](const ClaimReport& a, const ClaimReport& b) { return a.claim_id < b.claim_id; });
}

}  // namespace coxrig
