#pragma once

#include <string>
#include <vector>

namespace dichrom {

/// One checked claim: what the closed form predicts and what the solvers
/// computed.
struct ReproRow {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<ReproRow> rows;

  bool pass() const;
};

inline constexpr int kCriterionCount = 8;

/// Runs criterion `id` (1..kCriterionCount):
///   1 circulants, 2 directed cycles, 3 source stacking, 4 wheels,
///   5 Kneser instance, 6 Knauer family, 7 property suites,
///   8 planar spot checks.
CriterionReport run_criterion(int id);

/// Fixed-width table, one line per row, "PASS"/"FAIL" in the last column.
std::string format_report(const CriterionReport& report);

}  // namespace dichrom
