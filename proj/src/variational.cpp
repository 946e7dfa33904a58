#include "hoquant/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <stdexcept>
#include <vector>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>

#include "hoquant/random.hpp"
#include "small_solve.hpp"

namespace hoquant {

namespace {

GridFunction second_derivative(const GridFunction& f) { return differentiate(differentiate(f)); }

GridFunction times_square(const GridFunction& f, double scale) {
  return weighted(f, [scale](double x) { return scale * x * x; });
}

// \int omega^2 x^2 Re(f conj(g)) dx
double weighted_inner(const GridFunction& f, const GridFunction& g, double omega) {
  return inner_real(times_square(f, omega * omega), g);
}

void require_matching(const ConjugatePair& a, const ConjugatePair& b) {
  require_same_grid(a.psi, b.psi, "variation (psi component)");
  require_same_grid(a.F, b.F, "variation (F component)");
}

double diag_scale(double a, double b, double c) {
  return std::max({std::abs(a), std::abs(b), std::abs(c)});
}

// Linearized constraints (11)-(13) evaluated along a direction.
struct ConstraintDerivatives {
  double d11, d12, d13;
};

struct ConstraintGeometry {
  GridFunction psi_prime, F_prime;
  GridFunction q2psi;  // omega^2 q^2 psi
  // L2 gradients of the three constraints, (psi part, F part).
  ConjugatePair g11, g12, g13;
};

ConstraintDerivatives constraint_derivatives(const ConjugatePair& pair,
                                             const ConstraintGeometry& geo,
                                             const ConjugatePair& d) {
  return {inner_real(geo.F_prime, differentiate(d.F)) - inner_real(geo.q2psi, d.psi),
          2.0 * inner_real(pair.F, d.F), 2.0 * inner_real(pair.psi, d.psi)};
}

ConstraintGeometry constraint_geometry(const ConjugatePair& pair) {
  const double w2 = pair.omega * pair.omega;
  GridFunction q2psi = times_square(pair.psi, w2);
  GridFunction zero_psi(pair.psi.grid());
  GridFunction zero_F(pair.F.grid());
  ConjugatePair g11{q2psi * complex(-1.0), second_derivative(pair.F) * complex(-1.0), pair.omega,
                    false};
  ConjugatePair g12{zero_psi, pair.F * complex(2.0), pair.omega, false};
  ConjugatePair g13{pair.psi * complex(2.0), zero_F, pair.omega, false};
  return {differentiate(pair.psi), differentiate(pair.F), std::move(q2psi), std::move(g11),
          std::move(g12), std::move(g13)};
}

}  // namespace

bool EecReport::passes(double tolerance) const { return worst() <= tolerance; }

double EecReport::worst() const {
  return std::max({r_norm_psi, r_decay_psi, r_decay_Fint, r_norm_F, r_parseval_F, r_parseval_psi});
}

double ConstraintResiduals::max_abs() const {
  return std::max({std::abs(c11), c12, c13, c14, c15});
}

double MultiplierEstimate::beta1() const { return std::sqrt(-1.0 / lambda1); }
double MultiplierEstimate::gamma() const { return lambda3 / lambda1; }

double functional_I(const ConjugatePair& pair) {
  return 0.5 * gradient_energy(pair.psi) - 0.5 * weighted_second_moment(pair.F, pair.omega);
}

ConstraintResiduals constraint_residuals(const ConjugatePair& pair) {
  ConstraintResiduals r;
  r.c11 = 0.5 * gradient_energy(pair.F) - 0.5 * weighted_second_moment(pair.psi, pair.omega);
  r.c12 = std::abs(norm_squared(pair.F) - 1.0);
  r.c13 = std::abs(norm_squared(pair.psi) - 1.0);
  r.c14 = std::max(std::abs(pair.psi[0]), std::abs(pair.psi[pair.psi.size() - 1]));
  const double b = pair.psi.grid().half_width();
  r.c15 = std::max(std::abs(inverse_integral_at(pair.F, pair.omega, -b)),
                   std::abs(inverse_integral_at(pair.F, pair.omega, b)));
  return r;
}

EecReport eec_report(const ConjugatePair& pair) {
  const ConstraintResiduals c = constraint_residuals(pair);
  const ParsevalResiduals p = parseval_residuals(pair);
  return EecReport{c.c13, c.c14, c.c15, c.c12, p.r8, p.r9};
}

double first_variation(const ConjugatePair& pair, const ConjugatePair& direction) {
  require_matching(pair, direction);
  return inner_real(differentiate(pair.psi), differentiate(direction.psi)) -
         weighted_inner(pair.F, direction.F, pair.omega);
}

double second_variation(const ConjugatePair& direction) {
  return gradient_energy(direction.psi) - weighted_second_moment(direction.F, direction.omega);
}

ConjugatePair displaced(const ConjugatePair& pair, const ConjugatePair& direction, double scale) {
  require_matching(pair, direction);
  return ConjugatePair{pair.psi + direction.psi * complex(scale),
                       pair.F + direction.F * complex(scale), pair.omega, false};
}

MultiplierEstimate estimate_multipliers(const ConjugatePair& pair,
                                        const OscillatorParams& params) {
  (void)params;
  if (norm_squared(pair.psi) == 0.0 || norm_squared(pair.F) == 0.0)
    throw std::invalid_argument("estimate_multipliers: psi or F vanishes identically");
  const double w2 = pair.omega * pair.omega;

  // R_psi = a_psi + lambda1 u + lambda3 psi,  R_F = a_F + lambda1 v + lambda2 F.
  const GridFunction a_psi = second_derivative(pair.psi) * complex(-0.5);
  const GridFunction u = times_square(pair.psi, -0.5 * w2);
  const GridFunction a_F = times_square(pair.F, -0.5 * w2);
  const GridFunction v = second_derivative(pair.F) * complex(-0.5);
  const GridFunction& s = pair.psi;
  const GridFunction& t = pair.F;

  std::array<std::array<double, 3>, 3> A{};
  std::array<double, 3> rhs{};
  // column order: lambda1, lambda2, lambda3
  A[0][0] = inner_real(u, u) + inner_real(v, v);
  A[0][1] = inner_real(v, t);
  A[0][2] = inner_real(u, s);
  A[1][1] = inner_real(t, t);
  A[2][2] = inner_real(s, s);
  A[1][0] = A[0][1];
  A[2][0] = A[0][2];
  rhs[0] = -(inner_real(u, a_psi) + inner_real(v, a_F));
  rhs[1] = -inner_real(t, a_F);
  rhs[2] = -inner_real(s, a_psi);

  const auto x =
      detail::solve_dense<3>(A, rhs, 1e-14 * diag_scale(A[0][0], A[1][1], A[2][2]));

  MultiplierEstimate est;
  est.lambda1 = x[0];
  est.lambda2 = x[1];
  est.lambda3 = x[2];

  GridFunction r_psi = a_psi + u * complex(x[0]) + s * complex(x[2]);
  GridFunction r_F = a_F + v * complex(x[0]) + t * complex(x[1]);
  // The doubly differenced boundary samples carry one-sided stencil error only.
  for (GridFunction* r : {&r_psi, &r_F}) {
    const std::size_t n = r->size();
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, n - 2, n - 1}) (*r)[i] = 0.0;
  }
  est.fit_residual = std::sqrt(norm_squared(r_psi) + norm_squared(r_F));
  return est;
}

ConjugatePair probe_direction(const ConjugatePair& pair, std::uint64_t seed, std::uint64_t index,
                              unsigned band_modes) {
  auto modulate = [&](const GridFunction& base, std::uint64_t component) {
    const double b = base.grid().half_width();
    std::vector<double> sin_c(band_modes), cos_c(band_modes);
    for (unsigned j = 0; j < band_modes; ++j) {
      sin_c[j] = counter_rng::uniform(-1.0, 1.0, {seed, index, component, j, 0});
      cos_c[j] = counter_rng::uniform(-1.0, 1.0, {seed, index, component, j, 1});
    }
    return weighted(base, [&](double x) {
      double m = 0.0;
      for (unsigned j = 0; j < band_modes; ++j) {
        const double k = (j + 1) * std::numbers::pi / b;
        m += sin_c[j] * std::sin(k * x) + cos_c[j] * std::cos(k * x);
      }
      return m;
    });
  };
  return ConjugatePair{modulate(pair.psi, 0), modulate(pair.F, 1), pair.omega, false};
}

double stationarity_probe(const ConjugatePair& pair, const OscillatorParams& params,
                          unsigned num_dirs, std::uint64_t seed, ProbeOptions options) {
  const ConstraintResiduals entry = constraint_residuals(pair);
  if (entry.max_abs() > options.entry_tolerance)
    throw std::invalid_argument("stationarity_probe: pair violates the constraints (worst " +
                                std::to_string(entry.max_abs()) + ")");

  const MultiplierEstimate lambda = estimate_multipliers(pair, params);
  const ConstraintGeometry geo = constraint_geometry(pair);

  // M[k][l] = dC_k(g_l) for k, l over (11, 12, 13).
  const std::array<const ConjugatePair*, 3> grads{&geo.g11, &geo.g12, &geo.g13};
  std::array<std::array<double, 3>, 3> M{};
  for (std::size_t l = 0; l < 3; ++l) {
    const ConstraintDerivatives d = constraint_derivatives(pair, geo, *grads[l]);
    M[0][l] = d.d11;
    M[1][l] = d.d12;
    M[2][l] = d.d13;
  }
  const double m_tol = 1e-14 * diag_scale(M[0][0], M[1][1], M[2][2]);

  std::vector<double> scores(num_dirs, 0.0);
  tbb::parallel_for(tbb::blocked_range<std::size_t>(0, num_dirs),
                    [&](const tbb::blocked_range<std::size_t>& range) {
    for (std::size_t i = range.begin(); i != range.end(); ++i) {
      ConjugatePair d = probe_direction(pair, seed, i, options.band_modes);
      const ConstraintDerivatives raw = constraint_derivatives(pair, geo, d);
      const auto c = detail::solve_dense<3>(M, {raw.d11, raw.d12, raw.d13}, m_tol);
      for (std::size_t l = 0; l < 3; ++l) d = displaced(d, *grads[l], -c[l]);

      const ConstraintDerivatives tangent = constraint_derivatives(pair, geo, d);
      const double dJ = first_variation(pair, d) + lambda.lambda1 * tangent.d11 +
                        lambda.lambda2 * tangent.d12 + lambda.lambda3 * tangent.d13;
      const double norm = std::sqrt(norm_squared(d.psi) + norm_squared(d.F));
      scores[i] = norm > 0.0 ? std::abs(dJ) / norm : 0.0;
    }
  });
  return scores.empty() ? 0.0 : *std::max_element(scores.begin(), scores.end());
}

}  // namespace hoquant
