#pragma once

// The verification suites behind each harness subcommand. Every experiment
// produces one CSV table plus a list of named checks; the command line layer
// only parses flags and prints.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vilenkin/csv.hpp"

namespace vilenkin {

struct ExperimentConfig {
  std::string experiment;
  /// Empty means the experiment's default modulus spec.
  std::string modulus;
  std::optional<std::size_t> depth;
  /// Empty means the experiment's default gauge.
  std::string gauge;
  /// "dyadic" or "ladder" (scale points), "diag" (every n), or a list "1,2,5".
  std::string sweep = "dyadic";
  std::vector<double> p;
  std::vector<std::size_t> scales;
  std::size_t trials = 0;
  double A = 1.0;
  double c_prime = 1.0;
  std::size_t blocks = 2;
  Index max_cells = Index{1} << 22;
  std::uint64_t seed = 1;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentResult {
  explicit ExperimentResult(CsvTable t) : table(std::move(t)) {}

  CsvTable table;
  std::vector<Check> checks;
  /// Fitted constants, reductions and other remarks worth printing.
  std::vector<std::string> notes;

  std::size_t passed() const noexcept;
  bool ok() const noexcept { return passed() == checks.size(); }
};

/// Names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

/// Runs one suite. Throws std::invalid_argument for bad configuration and
/// BudgetExceeded for requests beyond the size budgets.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Parses the sweep spec against M_d: sorted, unique, within [1, M_d].
std::vector<Index> parse_sweep(const std::string& spec, const ModulusSequence& ms, std::size_t d);

}  // namespace vilenkin
