#pragma once

// Acceptance suites C1..C10, shared by the test binary and `alcove selfcheck`.

#include <string>
#include <vector>

namespace alcove {

struct SelfcheckOptions {
  std::size_t max_len = 10;
  std::vector<std::string> presets{"SL2", "PGL2", "SL3", "C2"};
  unsigned jobs = 1;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = true;
  std::size_t checks = 0;
  /// First few failing checks.
  std::vector<std::string> failures;
  double seconds = 0;
};

std::vector<std::string> criterion_ids();
CriterionResult run_criterion(const std::string& id, const SelfcheckOptions& options);
/// Runs the given criteria (all when empty), up to options.jobs at a time,
/// returning results in the order requested.
std::vector<CriterionResult> run_selfcheck(const SelfcheckOptions& options, std::vector<std::string> ids = {});

}  // namespace alcove
