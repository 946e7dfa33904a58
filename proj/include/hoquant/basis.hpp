#pragma once

#include <optional>

#include "hoquant/grid.hpp"
#include "hoquant/transform.hpp"

namespace hoquant {

/// Oscillator frequency, the two ladder parameters, and the basis scale.
///
/// beta1 sets the coordinate-side ladder (gamma_n = (2n+1) beta1 omega / 2) and
/// beta2 the momentum side. The Hermite basis scale alpha defaults to
/// sqrt(omega / beta1), the scale at which the hermite functions solve
/// -beta1^2/2 psi'' + omega^2 q^2/2 psi = gamma psi.
class OscillatorParams {
 public:
  OscillatorParams(double omega, double beta1, double beta2,
                   std::optional<double> alpha = std::nullopt);

  double omega() const { return omega_; }
  double beta1() const { return beta1_; }
  double beta2() const { return beta2_; }
  double alpha() const { return alpha_; }
  double beta() const { return 0.5 * (beta1_ + beta2_); }
  double chi1() const { return chi1_; }
  double chi2() const { return 1.0 - chi1_; }

  /// gamma_n = (2n + 1) beta1 omega / 2.
  double gamma(unsigned n) const;

 private:
  double omega_;
  double beta1_;
  double beta2_;
  double alpha_;
  double chi1_;
};

inline constexpr unsigned kMaxHermiteIndex = 60;

/// Largest |q| at which mode n still has appreciable weight: the classical
/// turning point sqrt(2n+1)/alpha plus a margin of 4/alpha.
double required_half_width(unsigned n, double alpha);

/// Values of the normalized hermite functions psi_0..psi_{n_max} at scale alpha
/// at a single point, via the three-term recurrence on normalized functions:
///   psi_{k+1} = sqrt(2/(k+1)) alpha x psi_k - sqrt(k/(k+1)) psi_{k-1}.
std::vector<double> hermite_values(unsigned n_max, double alpha, double x);

/// n-th normalized hermite function sqrt(alpha) h_n(alpha q) sampled on grid.
GridFunction hermite_mode(unsigned n, double alpha, const Grid& grid);

/// (psi_n, forward(psi_n)) at the params' basis scale, marked consistent.
ConjugatePair mode_pair(unsigned n, const OscillatorParams& params, const Grid& q_grid,
                        const Grid& L_grid);

/// Same as above with the L-grid from conjugate_grid.
ConjugatePair mode_pair(unsigned n, const OscillatorParams& params, const Grid& q_grid);

/// Default q-grid for a basis scale: half-width 10/alpha, 4001 points.
Grid default_q_grid(double alpha, std::size_t n_points = 4001);

}  // namespace hoquant
