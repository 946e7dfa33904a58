#include "hoquant/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hoquant {

OscillatorParams::OscillatorParams(double omega, double beta1, double beta2,
                                   std::optional<double> alpha)
    : omega_(omega), beta1_(beta1), beta2_(beta2), alpha_(0.0), chi1_(0.0) {
  if (!(omega > 0.0) || !(beta1 > 0.0) || !(beta2 > 0.0) || !std::isfinite(omega) ||
      !std::isfinite(beta1) || !std::isfinite(beta2))
    throw std::invalid_argument("omega, beta1 and beta2 must be positive and finite");
  alpha_ = alpha.value_or(std::sqrt(omega / beta1));
  if (!(alpha_ > 0.0) || !std::isfinite(alpha_))
    throw std::invalid_argument("basis scale alpha must be positive and finite");
  chi1_ = beta1 / (beta1 + beta2);
}

double OscillatorParams::gamma(unsigned n) const {
  return (2.0 * n + 1.0) * beta1_ * omega_ / 2.0;
}

double required_half_width(unsigned n, double alpha) {
  return (std::sqrt(2.0 * n + 1.0) + 4.0) / alpha;
}

std::vector<double> hermite_values(unsigned n_max, double alpha, double x) {
  std::vector<double> v(n_max + 1);
  const double y = alpha * x;
  v[0] = std::sqrt(alpha) * std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * y * y);
  if (n_max >= 1) v[1] = std::sqrt(2.0) * y * v[0];
  for (unsigned k = 1; k < n_max; ++k) {
    const double kk = k;
    v[k + 1] = std::sqrt(2.0 / (kk + 1.0)) * y * v[k] - std::sqrt(kk / (kk + 1.0)) * v[k - 1];
  }
  return v;
}

GridFunction hermite_mode(unsigned n, double alpha, const Grid& grid) {
  if (n > kMaxHermiteIndex)
    throw std::invalid_argument("hermite index " + std::to_string(n) +
                                " exceeds the recurrence bound " +
                                std::to_string(kMaxHermiteIndex));
  if (!(alpha > 0.0)) throw std::invalid_argument("hermite scale alpha must be positive");
  if (grid.half_width() * alpha < std::sqrt(2.0 * n + 1.0) + 4.0)
    throw std::invalid_argument("grid too small for hermite mode " + std::to_string(n) +
                                ": needs half-width >= " +
                                std::to_string(required_half_width(n, alpha)));
  return GridFunction::sample(grid, [&](double q) { return hermite_values(n, alpha, q)[n]; });
}

ConjugatePair mode_pair(unsigned n, const OscillatorParams& params, const Grid& q_grid,
                        const Grid& L_grid) {
  const double partner_scale = params.omega() / params.alpha();
  if (L_grid.half_width() * partner_scale < std::sqrt(2.0 * n + 1.0) + 4.0)
    throw std::invalid_argument("L-grid too small for the transformed mode " +
                                std::to_string(n));
  return make_consistent_pair(hermite_mode(n, params.alpha(), q_grid), params.omega(), L_grid);
}

ConjugatePair mode_pair(unsigned n, const OscillatorParams& params, const Grid& q_grid) {
  return mode_pair(n, params, q_grid, conjugate_grid(q_grid, params.omega(), params.alpha()));
}

Grid default_q_grid(double alpha, std::size_t n_points) { return Grid(10.0 / alpha, n_points); }

}  // namespace hoquant
