#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hoquant {

/// Rows of (angular frequency omega, energy). omega is angular (rad/s), never
/// the ordinary frequency nu.
struct FrequencyEnergyData {
  struct Row {
    double omega = 0.0;
    double energy = 0.0;
  };
  std::vector<Row> rows;
  std::optional<double> noise_level;
  std::optional<std::uint64_t> seed;
};

struct FitResult {
  double beta_hat = 0.0;
  double work_function = 0.0;  ///< 0 for through-origin fits
  double rms_residual = 0.0;
};

/// Least squares through the origin: beta = sum omega y / sum omega^2.
/// Throws std::invalid_argument if the data is empty or all omega are zero.
FitResult fit_beta(const FrequencyEnergyData& data);

/// Ordinary least squares for y = beta omega - W.
/// Throws std::invalid_argument with fewer than two distinct omega values.
FitResult fit_photoelectric(const FrequencyEnergyData& data);

struct SynthSpec {
  double beta_true = 1.0545718e-34;
  double work_function = 0.0;
  double omega_min = 1.0;
  double omega_max = 2.0;
  std::size_t n_rows = 10;
  double noise_level = 0.0;  ///< relative Gaussian noise on each clean energy
  std::uint64_t seed = 0;
};

/// Rows at evenly spaced omega in [omega_min, omega_max] with energy
/// beta_true omega - W, optionally with multiplicative Gaussian noise. Rows
/// whose energy is not positive (below threshold) are dropped.
FrequencyEnergyData synth_data(const SynthSpec& spec);

/// CSV with header "omega,energy".
void write_csv(std::ostream& out, const FrequencyEnergyData& data);
/// Throws std::runtime_error on a malformed file.
FrequencyEnergyData read_csv(std::istream& in);

}  // namespace hoquant
