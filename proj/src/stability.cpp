#include "hoquant/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

#include "hoquant/basis.hpp"
#include "hoquant/random.hpp"

namespace hoquant {

void StabilityConfig::validate() const {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("c must lie in [0, 1]");
  if (num_modes < 1) throw std::invalid_argument("num_modes must be >= 1");
  if (!(rho_max >= 0.0) || !std::isfinite(rho_max))
    throw std::invalid_argument("rho_max must be nonnegative and finite");
  if (num_trials < 1) throw std::invalid_argument("num_trials must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  (void)grid();
}

std::vector<double> default_c_sweep() { return {1.0, 0.999, 0.99, 0.9, 0.5, 0.1, 0.01, 0.001, 0.0}; }

GridFunction base_state(const StabilityConfig& config, const Grid& grid) {
  if (!(config.c >= 0.0 && config.c <= 1.0)) throw std::invalid_argument("c must lie in [0, 1]");
  const double a0 = std::sqrt(config.c);
  const double a1 = std::sqrt(1.0 - config.c);
  if (a1 == 0.0) return hermite_mode(0, config.alpha, grid);
  if (a0 == 0.0) return hermite_mode(1, config.alpha, grid);
  return hermite_mode(0, config.alpha, grid) * complex(a0) +
         hermite_mode(1, config.alpha, grid) * complex(a1);
}

std::vector<double> perturbation_coefficients(const StabilityConfig& config,
                                              std::uint64_t trial_index) {
  std::vector<double> rho(config.num_modes);
  for (unsigned j = 0; j < config.num_modes; ++j)
    rho[j] = counter_rng::uniform(-config.rho_max, config.rho_max, {config.seed, trial_index, j + 1u});
  return rho;
}

namespace {

// sin(j pi q / b) for j = 1..J, stored mode-major.
std::vector<double> sine_table(const Grid& grid, unsigned modes) {
  const std::size_t n = grid.size();
  const double b = grid.half_width();
  std::vector<double> table(static_cast<std::size_t>(modes) * n);
  for (unsigned j = 0; j < modes; ++j) {
    const double k = (j + 1) * std::numbers::pi / b;
    for (std::size_t i = 0; i < n; ++i) table[j * n + i] = std::sin(k * grid.point(i));
  }
  return table;
}

std::vector<double> modulation(const std::vector<double>& table, const std::vector<double>& rho,
                               std::size_t n) {
  std::vector<double> s(n, 0.0);
  for (std::size_t j = 0; j < rho.size(); ++j) {
    const double r = rho[j];
    const double* row = table.data() + j * n;
    for (std::size_t i = 0; i < n; ++i) s[i] += r * row[i];
  }
  return s;
}

}  // namespace

GridFunction perturbation(const GridFunction& base, const StabilityConfig& config,
                          std::uint64_t trial_index) {
  if (trial_index >= config.num_trials)
    throw std::out_of_range("trial index " + std::to_string(trial_index) + " >= num_trials");
  const std::size_t n = base.size();
  const std::vector<double> table = sine_table(base.grid(), config.num_modes);
  const std::vector<double> s = modulation(table, perturbation_coefficients(config, trial_index), n);
  GridFunction d = base;
  for (std::size_t i = 0; i < n; ++i) d[i] = base[i].real() * s[i];
  return d;
}

StabilitySummary summarize(const std::vector<double>& w) {
  StabilitySummary s;
  if (w.empty()) return s;
  double sum = 0.0;
  for (double x : w) sum += x;
  s.mean = sum / static_cast<double>(w.size());
  double ss = 0.0;
  for (double x : w) {
    ss += (x - s.mean) * (x - s.mean);
    s.max_abs = std::max(s.max_abs, std::abs(x));
  }
  s.std = std::sqrt(ss / static_cast<double>(w.size()));
  return s;
}

StabilitySummary summarize(const StabilityResult& result) { return summarize(result.w); }

std::vector<StabilityResult> run_experiment(const std::vector<StabilityConfig>& configs) {
  if (configs.empty()) throw std::invalid_argument("run_experiment needs at least one config");
  std::vector<StabilityResult> results;
  results.reserve(configs.size());
  for (const StabilityConfig& config : configs) {
    config.validate();
    const Grid grid = config.grid();
    const std::size_t n = grid.size();
    const std::vector<double> base = base_state(config, grid).real_part();
    const std::vector<double> table = sine_table(grid, config.num_modes);

    StabilityResult result{config, std::vector<double>(config.num_trials, 0.0), {}};
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, config.num_trials),
                      [&](const tbb::blocked_range<std::size_t>& range) {
                        std::vector<double> sq(n);
                        for (std::size_t t = range.begin(); t != range.end(); ++t) {
                          const std::vector<double> s =
                              modulation(table, perturbation_coefficients(config, t), n);
                          for (std::size_t i = 0; i < n; ++i) {
                            const double v = base[i] + base[i] * s[i];
                            sq[i] = v * v;
                          }
                          result.w[t] = simpson(sq, grid.spacing()) - 1.0;
                        }
                      });
    result.summary = summarize(result.w);
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace hoquant
