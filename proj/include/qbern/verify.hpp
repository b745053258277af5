#pragma once

// The acceptance suite: thirteen exact identity checks, shared by the
// `verify` CLI command and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace qbern {

enum class Profile { Quick, Full };

/// "quick" or "full"; throws std::invalid_argument otherwise.
Profile parse_profile(const std::string& name);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Number of exact identities checked, or the first failure.
  std::string detail;
  double seconds = 0;
};

/// Number of criteria (ids run from 1 to this value).
int criterion_count();

/// Runs one criterion; exceptions are reported as failures.
CriterionResult run_criterion(int id, Profile profile);

/// Runs all criteria in order. `on_result` (if set) is called after each one.
std::vector<CriterionResult> run_acceptance(
    Profile profile, const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  title  (detail)" without the timing, so reports are reproducible.
std::string format_result(const CriterionResult& r);

}  // namespace qbern
