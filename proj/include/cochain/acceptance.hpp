#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cochain {

struct SuiteOptions {
  std::uint64_t seed = 2024;
  /// Criterion names to run; empty means all.
  std::vector<std::string> only;
};

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Names in order: snf tothom piling e1 pages decalage convergence lambda
/// massey bar cobar barcobar day totcof.
const std::vector<std::string>& criterion_names();

/// Runs the selected criteria, printing one line each. Unknown names in
/// `only` throw std::invalid_argument before anything runs.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& options, std::ostream& out);

}  // namespace cochain
