#pragma once

#include <string>
#include <vector>

namespace sbdo {

// One verdict of the identity suite.
struct CheckRecord {
  std::string check;
  std::string params;  // "n=2 k=1 m=2" and similar
  bool passed = false;
  std::string detail;  // residual summary when failed, notes otherwise
  double seconds = 0;
};

struct VerifyOptions {
  int n_max = 2;
  int m_max = 2;
  std::vector<std::string> checks;  // empty selects every check
  int jobs = 1;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  bool all_passed() const;
  // Stable key order and record order; timings dropped unless asked for.
  std::string json(bool timings = true) const;
  std::string text() const;
};

// Names accepted in VerifyOptions::checks, in run order.
const std::vector<std::string>& check_names();

// Runs the selected checks over n = 1..n_max (and k, m where they apply).
// Raises DomainError for n_max outside 1..4, m_max outside 1..3, jobs < 1
// or an unknown check name. Records come back in a fixed order regardless of
// the number of jobs.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace sbdo
