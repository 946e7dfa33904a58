#pragma once

#include <cstdint>

#include "hoquant/basis.hpp"
#include "hoquant/transform.hpp"

namespace hoquant {

/// Residuals of the six equilibrium conditions that replace admissibility:
/// normalization and decay of psi, decay of the inverse integral of F,
/// normalization of F, and the two derivative Parseval identities.
struct EecReport {
  double r_norm_psi = 0.0;
  double r_decay_psi = 0.0;
  double r_decay_Fint = 0.0;
  double r_norm_F = 0.0;
  double r_parseval_F = 0.0;
  double r_parseval_psi = 0.0;

  bool passes(double tolerance) const;
  double worst() const;
};

/// Residuals of the constraint set attached to the functional.
struct ConstraintResiduals {
  double c11 = 0.0;  ///< signed: 1/2 \int|F'|^2 - 1/2 \int omega^2 q^2 |psi|^2
  double c12 = 0.0;  ///< | \int |F|^2 - 1 |
  double c13 = 0.0;  ///< | \int |psi|^2 - 1 |
  double c14 = 0.0;  ///< max |psi(+-b)|
  double c15 = 0.0;  ///< max | \int F exp(-i omega q L) dL | at q = +-b

  double max_abs() const;
};

struct MultiplierEstimate {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double fit_residual = 0.0;

  /// beta1 = sqrt(-1 / lambda1).
  double beta1() const;
  /// gamma = lambda3 / lambda1.
  double gamma() const;
};

/// I = 1/2 \int |psi'|^2 dq - 1/2 \int omega^2 L^2 |F|^2 dL.
double functional_I(const ConjugatePair& pair);

ConstraintResiduals constraint_residuals(const ConjugatePair& pair);

EecReport eec_report(const ConjugatePair& pair);

/// Gateaux derivative of I at `pair` along `direction`:
/// \int Re(psi' conj(dpsi')) dq - \int omega^2 L^2 Re(F conj(dF)) dL.
double first_variation(const ConjugatePair& pair, const ConjugatePair& direction);

/// \int |dpsi'|^2 dq - \int omega^2 L^2 |dF|^2 dL. Because I is quadratic,
/// I(p + d) - I(p) = first_variation(p, d) + second_variation(d) / 2 exactly.
double second_variation(const ConjugatePair& direction);

/// Least-squares multipliers for the two Euler-Lagrange equations
///   -1/2 psi'' - lambda1 omega^2 q^2/2 psi + lambda3 psi = 0
///   -lambda1/2 F'' - omega^2 L^2/2 F + lambda2 F = 0
/// with lambda1 shared. fit_residual is the combined L2 misfit.
/// Throws std::invalid_argument when psi or F vanishes.
MultiplierEstimate estimate_multipliers(const ConjugatePair& pair,
                                        const OscillatorParams& params);

/// pair + scale * direction, component-wise; the result is not consistency-checked.
ConjugatePair displaced(const ConjugatePair& pair, const ConjugatePair& direction, double scale);

struct ProbeOptions {
  unsigned band_modes = 20;           ///< sinusoid harmonics per direction
  double entry_tolerance = 1e-6;      ///< constraint tolerance required on entry
};

/// Maximum over `num_dirs` random smooth directions of |dJ| / ||d||, where each
/// direction is first projected onto the tangent space of the three integral
/// constraints and J adds the fitted multipliers times those constraints to I.
/// Directions are keyed on (seed, direction index) and so are reproducible.
/// Throws std::invalid_argument when the pair violates the constraints.
double stationarity_probe(const ConjugatePair& pair, const OscillatorParams& params,
                          unsigned num_dirs, std::uint64_t seed, ProbeOptions options = {});

/// The i-th raw (unprojected) probe direction for a pair.
ConjugatePair probe_direction(const ConjugatePair& pair, std::uint64_t seed, std::uint64_t index,
                              unsigned band_modes);

}  // namespace hoquant
