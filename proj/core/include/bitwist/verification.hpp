#pragma once

// Executable acceptance suite shared by the `verify` command and the
// acceptance test binary. Each criterion is self-contained and exact.

#include <string>
#include <vector>

namespace bitwist::verification {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // first counterexample on failure, a summary otherwise
  double seconds = 0.0;
};

/// 1..10 in order.
std::vector<int> criterion_ids();

/// Throws InvalidArgument for an unknown id. Exceptions raised by the
/// library while checking are caught and reported as failures.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// "PASS [ 2] title (1.23 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace bitwist::verification
