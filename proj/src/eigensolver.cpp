#include "hoquant/eigensolver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hoquant/tridiagonal.hpp"

namespace hoquant {

namespace {

double harmonic(double x, double omega) { return 0.5 * omega * omega * x * x; }

SymmetricTridiagonal discretize(double h, std::size_t interior, double first_x, double kinetic,
                                double (*potential)(double, double), double omega) {
  SymmetricTridiagonal t;
  t.diag.resize(interior);
  t.off.assign(interior > 0 ? interior - 1 : 0, -kinetic / (h * h));
  for (std::size_t i = 0; i < interior; ++i) {
    const double x = first_x + static_cast<double>(i) * h;
    t.diag[i] = 2.0 * kinetic / (h * h) + potential(x, omega);
  }
  return t;
}

void fix_sign(std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  for (std::size_t i = v.size(); i-- > 0;) {
    if (std::abs(v[i]) >= 1e-3 * peak) {
      if (v[i] < 0.0)
        for (double& x : v) x = -x;
      return;
    }
  }
}

}  // namespace

std::vector<EigenPair> solve_sturm_liouville(const Grid& grid, double kinetic,
                                             double (*potential)(double, double), double omega,
                                             unsigned k, double scale, EigenOptions options) {
  if (k > kMaxEigenpairs)
    throw std::invalid_argument("at most " + std::to_string(kMaxEigenpairs) +
                                " eigenpairs are supported, requested " + std::to_string(k));
  if (k == 0) return {};
  if (grid.half_width() * scale < std::sqrt(2.0 * (k - 1) + 1.0) + 4.0)
    throw std::invalid_argument("grid too small: half-width must cover the turning point of mode " +
                                std::to_string(k - 1) + " plus margin (>= " +
                                std::to_string(required_half_width(k - 1, scale)) + ")");

  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const SymmetricTridiagonal fine = discretize(h, n - 2, grid.point(1), kinetic, potential, omega);
  if (fine.size() < k) throw std::invalid_argument("grid has fewer interior points than requested");
  const std::vector<double> raw = lowest_eigenvalues(fine, k);

  std::vector<double> extrapolated = raw;
  if (options.extrapolate) {
    const std::size_t coarse_interior = (n - 1) / 2 - 1;
    const SymmetricTridiagonal coarse =
        discretize(2.0 * h, coarse_interior, grid.point(2), kinetic, potential, omega);
    const std::vector<double> rough = lowest_eigenvalues(coarse, k);
    for (unsigned j = 0; j < k; ++j) extrapolated[j] = (4.0 * raw[j] - rough[j]) / 3.0;
  }

  std::vector<EigenPair> out;
  std::vector<std::vector<double>> found;
  for (unsigned j = 0; j < k; ++j) {
    std::vector<double> v = inverse_iteration(fine, raw[j], found);
    found.push_back(v);
    fix_sign(v);
    std::vector<complex> samples(n, 0.0);
    for (std::size_t i = 0; i + 2 < n; ++i) samples[i + 1] = v[i];
    GridFunction f(grid, std::move(samples));
    f *= complex(1.0 / std::sqrt(norm_squared(f)));
    out.push_back(EigenPair{j, extrapolated[j], raw[j], std::move(f)});
  }
  return out;
}

std::vector<EigenPair> solve_eq16(const OscillatorParams& params, const Grid& grid, unsigned k,
                                  EigenOptions options) {
  const double b1 = params.beta1();
  return solve_sturm_liouville(grid, 0.5 * b1 * b1, harmonic, params.omega(), k,
                               std::sqrt(params.omega() / b1), options);
}

std::vector<EigenPair> solve_eq17(const OscillatorParams& params, const Grid& L_grid, unsigned k,
                                  EigenOptions options) {
  const double b1 = params.beta1();
  return solve_sturm_liouville(L_grid, 0.5 / (b1 * b1), harmonic, params.omega(), k,
                               std::sqrt(params.omega() * b1), options);
}

double residual_eq16(const GridFunction& psi, double gamma, const OscillatorParams& params) {
  const double b1 = params.beta1();
  const double w2 = params.omega() * params.omega();
  const GridFunction d2 = differentiate(differentiate(psi));
  GridFunction r(psi.grid());
  const std::size_t n = psi.size();
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const double q = psi.grid().point(i);
    r[i] = -0.5 * b1 * b1 * d2[i] + 0.5 * w2 * q * q * psi[i] - gamma * psi[i];
  }
  return std::sqrt(norm_squared(r));
}

unsigned sign_changes(const GridFunction& f, double floor) {
  const double cutoff = floor * f.max_abs();
  unsigned changes = 0;
  int last = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = f[i].real();
    if (std::abs(x) <= cutoff) continue;
    const int s = x > 0.0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace hoquant
