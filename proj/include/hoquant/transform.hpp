#pragma once

#include "hoquant/grid.hpp"

namespace hoquant {

/// A coordinate-space function psi(q) together with its momentum-side partner
/// F(L), linked by the omega-scaled Fourier kernel exp(i omega q L).
struct ConjugatePair {
  GridFunction psi;
  GridFunction F;
  double omega = 1.0;
  /// Set only when F was produced by (or verified against) forward(psi).
  bool consistency_checked = false;
};

/// F(L) = sqrt(omega / 2 pi) \int psi(q) exp(i omega q L) dq, by direct Simpson
/// quadrature at every L-grid point. Rejects psi that has not decayed at the
/// ends of its grid (|psi(+-b)| > 1e-6 max|psi|).
GridFunction forward(const GridFunction& psi, double omega, const Grid& L_grid);

/// psi(q) = sqrt(omega / 2 pi) \int F(L) exp(-i omega q L) dL; same contract
/// as forward with the conjugate kernel.
GridFunction inverse(const GridFunction& F, double omega, const Grid& q_grid);

/// \int F(L) exp(-i omega q L) dL at a single q, without the prefactor.
complex inverse_integral_at(const GridFunction& F, double omega, double q);

/// L-grid paired with a q-grid: same point count, half-width b * alpha^2 / omega,
/// so that omega * q * L spans the same phase range and the transformed mode
/// (scale omega / alpha) is resolved as well as the original (scale alpha).
Grid conjugate_grid(const Grid& q_grid, double omega, double alpha);

/// Builds the pair (psi, forward(psi)) and marks it transform-consistent.
ConjugatePair make_consistent_pair(GridFunction psi, double omega, const Grid& L_grid);

/// ||F - forward(psi)||_2 / ||F||_2.
double consistency_error(const ConjugatePair& pair);

struct ParsevalResiduals {
  double r8 = 0.0;  ///< | \int |dF/dL|^2 dL - \int omega^2 q^2 |psi|^2 dq |
  double r9 = 0.0;  ///< | \int |dpsi/dq|^2 dq - \int omega^2 L^2 |F|^2 dL |
};

ParsevalResiduals parseval_residuals(const ConjugatePair& pair);

/// \int omega^2 x^2 |f(x)|^2 dx over f's own grid.
double weighted_second_moment(const GridFunction& f, double omega);

/// \int |f'|^2 using the module's finite-difference derivative.
double gradient_energy(const GridFunction& f);

}  // namespace hoquant
