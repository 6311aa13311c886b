#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stablegraphs {

/// One acceptance experiment outcome: every check line, a pass verdict that
/// includes the runtime budget, and CSV rows (header first) for --out.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::vector<std::string> details;
  std::vector<std::string> csv_rows;
};

struct ExperimentInfo {
  int index;
  const char* name;
  double budget_seconds;
};

const std::vector<ExperimentInfo>& experiment_catalog();

CriterionResult run_criterion(int index);
CriterionResult run_experiment(const std::string& name);

/// coloring-lb with custom sizes (CLI --sizes).
CriterionResult run_coloring_experiment(const std::vector<std::uint32_t>& sizes);

}  // namespace stablegraphs
