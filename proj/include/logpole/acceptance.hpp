#pragma once

#include <string>
#include <vector>

#include "logpole/config.hpp"

namespace logpole {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;  // measured numbers, one line per finding
  std::vector<std::string> check_reports;  // underlying per-check reports, JSON
};

/// Runs one verification criterion (1..9) against the resolved config.
CriterionResult run_criterion(int id, const ResolvedConfig& config);

std::vector<int> all_criteria();

/// Suite names accepted by the CLI: ode, partition, residual, norms,
/// decay, sandwich, duhamel, quotients, epsilon, all.
std::vector<int> criteria_for_suite(const std::string& suite);

}  // namespace logpole
