#pragma once

// The canned end-to-end acceptance suite, shared by the acceptance test
// binary and `polycensus verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polycensus {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  ///< measured values, or the exception text on error
  double seconds = 0;
};

struct AcceptanceOptions {
  int workers = 1;
  std::uint64_t seed = 20261019;
  int samples = 10000;  ///< random cases for the sampled criteria
};

/// 1..13
int acceptance_count();
std::string acceptance_title(int id);

/// Never throws for a known id: an exception inside the check is reported
/// as a failure with the message as detail.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace polycensus
