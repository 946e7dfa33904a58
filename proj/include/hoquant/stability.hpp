#pragma once

#include <cstdint>
#include <vector>

#include "hoquant/grid.hpp"

namespace hoquant {

/// One point of the normalization-drift experiment: the base state
/// sqrt(c) psi_0 + sqrt(1 - c) psi_1 is perturbed num_trials times by
///   dpsi(q) = base(q) * sum_{j=1..J} rho_j sin(j pi q / b),
/// rho_j uniform in [-rho_max, rho_max], and w_i = \int (base + dpsi)^2 - 1.
struct StabilityConfig {
  double c = 1.0;
  unsigned num_modes = 200;
  double rho_max = 5e-5;
  unsigned num_trials = 80;
  double b = 10.0;
  std::size_t n_points = 4001;
  double alpha = 1.0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  Grid grid() const { return Grid(b, n_points); }
};

struct StabilitySummary {
  double mean = 0.0;
  double std = 0.0;  ///< population standard deviation
  double max_abs = 0.0;
};

struct StabilityResult {
  StabilityConfig config;
  std::vector<double> w;
  StabilitySummary summary;
};

/// c values swept by default, from the pure psi_0 state to the pure psi_1 state.
std::vector<double> default_c_sweep();

/// sqrt(c) psi_0 + sqrt(1 - c) psi_1 at scale config.alpha (real-valued).
GridFunction base_state(const StabilityConfig& config, const Grid& grid);

/// The random coefficients rho_1..rho_J of one trial, keyed on (seed, trial, j).
std::vector<double> perturbation_coefficients(const StabilityConfig& config,
                                              std::uint64_t trial_index);

/// dpsi for one trial. Throws std::out_of_range if trial_index >= num_trials.
GridFunction perturbation(const GridFunction& base, const StabilityConfig& config,
                          std::uint64_t trial_index);

/// Runs every config; trials run in parallel but results are ordered by trial
/// index and do not depend on scheduling.
std::vector<StabilityResult> run_experiment(const std::vector<StabilityConfig>& configs);

StabilitySummary summarize(const std::vector<double>& w);
StabilitySummary summarize(const StabilityResult& result);

}  // namespace hoquant
