#include "hoquant/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

namespace hoquant {

namespace {

// Phase factors are advanced by complex multiplication and re-anchored with an
// exact sincos every kAnchor steps, which keeps the drift at a few ulps.
constexpr std::size_t kAnchor = 64;

void require_decay(const GridFunction& f, const char* what) {
  const double peak = f.max_abs();
  const double edge = std::max(std::abs(f[0]), std::abs(f[f.size() - 1]));
  if (peak == 0.0) return;
  if (edge > 1e-6 * peak)
    throw std::invalid_argument(std::string(what) +
                                ": input has not decayed at the grid ends; truncating the "
                                "oscillatory integral would corrupt the result");
}

// out(y_j) = prefactor * sum_k w_k f_k exp(i sign omega x_k y_j), summed in index order.
GridFunction kernel_transform(const GridFunction& f, double omega, const Grid& out_grid,
                              double sign) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  const Grid& in_grid = f.grid();
  const std::vector<double> w = simpson_weights(in_grid);
  const std::size_t n_in = in_grid.size();
  std::vector<complex> weighted(n_in);
  for (std::size_t k = 0; k < n_in; ++k) weighted[k] = w[k] * f[k];

  const double prefactor = std::sqrt(omega / (2.0 * std::numbers::pi));
  const double h = in_grid.spacing();
  std::vector<complex> out(out_grid.size());

  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, out_grid.size()),
                    [&](const tbb::blocked_range<std::size_t>& range) {
                      for (std::size_t j = range.begin(); j != range.end(); ++j) {
                        const double rate = sign * omega * out_grid.point(j);
                        const complex step = std::polar(1.0, rate * h);
                        complex acc{};
                        complex phase{};
                        for (std::size_t k = 0; k < n_in; ++k) {
                          if (k % kAnchor == 0)
                            phase = std::polar(1.0, rate * in_grid.point(k));
                          acc += weighted[k] * phase;
                          phase *= step;
                        }
                        out[j] = prefactor * acc;
                      }
                    });
  return GridFunction(out_grid, std::move(out));
}

}  // namespace

GridFunction forward(const GridFunction& psi, double omega, const Grid& L_grid) {
  require_decay(psi, "forward");
  return kernel_transform(psi, omega, L_grid, +1.0);
}

GridFunction inverse(const GridFunction& F, double omega, const Grid& q_grid) {
  require_decay(F, "inverse");
  return kernel_transform(F, omega, q_grid, -1.0);
}

complex inverse_integral_at(const GridFunction& F, double omega, double q) {
  const Grid& g = F.grid();
  std::vector<complex> v(F.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    v[k] = F[k] * std::polar(1.0, -omega * q * g.point(k));
  return simpson(v, g.spacing());
}

Grid conjugate_grid(const Grid& q_grid, double omega, double alpha) {
  if (!(omega > 0.0) || !(alpha > 0.0))
    throw std::invalid_argument("omega and alpha must be positive");
  return Grid(q_grid.half_width() * alpha * alpha / omega, q_grid.size());
}

ConjugatePair make_consistent_pair(GridFunction psi, double omega, const Grid& L_grid) {
  GridFunction F = forward(psi, omega, L_grid);
  return ConjugatePair{std::move(psi), std::move(F), omega, true};
}

double consistency_error(const ConjugatePair& pair) {
  const GridFunction expected = forward(pair.psi, pair.omega, pair.F.grid());
  const double denom = std::sqrt(norm_squared(pair.F));
  const double diff = std::sqrt(norm_squared(pair.F - expected));
  return denom > 0.0 ? diff / denom : diff;
}

double weighted_second_moment(const GridFunction& f, double omega) {
  std::vector<double> a(f.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = f.grid().point(i);
    a[i] = omega * omega * x * x * std::norm(f[i]);
  }
  return simpson(a, f.grid().spacing());
}

double gradient_energy(const GridFunction& f) { return norm_squared(differentiate(f)); }

ParsevalResiduals parseval_residuals(const ConjugatePair& pair) {
  ParsevalResiduals r;
  r.r8 = std::abs(gradient_energy(pair.F) - weighted_second_moment(pair.psi, pair.omega));
  r.r9 = std::abs(gradient_energy(pair.psi) - weighted_second_moment(pair.F, pair.omega));
  return r;
}

}  // namespace hoquant
