#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hoquant/basis.hpp"

namespace hoquant {

struct UniformDist {
  double lo = 0.0;
  double hi = 1.0;
};
struct PointMass {
  double value = 0.0;
};
struct DiscreteDist {
  std::vector<double> values;
  std::vector<double> weights;
};

/// The small catalog of laws used for the angle and action variables.
using Distribution = std::variant<UniformDist, PointMass, DiscreteDist>;

/// Parses "uniform:LO:HI", "point:V" or "discrete:V1,V2,...:W1,W2,...".
/// "uniform-angle" is shorthand for uniform on [0, 2 pi).
Distribution parse_distribution(const std::string& text);
std::string describe(const Distribution& d);

/// Mean of the law.
double mean(const Distribution& d);

/// Draw from a distribution given a uniform variate u in [0, 1).
double draw(const Distribution& d, double u);

/// Angle-action pair with the coordinate and momentum it parameterizes:
/// q = sqrt(2a/omega) sin Q, p = sqrt(2 a omega) cos Q.
struct EnsembleSample {
  double Q = 0.0;
  double a = 0.0;
  double q = 0.0;
  double p = 0.0;
};

/// N independent samples; Q and a are drawn independently, each keyed on
/// (seed, sample index, stream). Throws std::invalid_argument on invalid laws
/// (negative actions, angles outside [0, 2 pi], nonpositive omega, N == 0).
std::vector<EnsembleSample> sample_ensemble(const Distribution& Q_dist, const Distribution& a_dist,
                                            std::size_t N, double omega, std::uint64_t seed);

struct VteEstimate {
  double V = 0.0;  ///< mean of omega^2 q^2 / 2
  double T = 0.0;  ///< mean of p^2 / 2
  double E = 0.0;  ///< V + T
  double mean_action = 0.0;
  double a_omega = 0.0;    ///< <a> omega
  double sin2 = 0.0;       ///< mean of sin^2 Q
  double cos2 = 0.0;       ///< mean of cos^2 Q
  double V_factored = 0.0; ///< <a> omega <sin^2 Q>
  double T_factored = 0.0; ///< <a> omega <cos^2 Q>
  double V_stderr = 0.0;   ///< standard error of the raw V estimator
  double T_stderr = 0.0;
  /// max over samples of |p^2/2 + omega^2 q^2/2 - a omega| / max(a omega, tiny)
  double max_energy_identity_error = 0.0;
};

/// Throws std::invalid_argument on an empty sample set.
VteEstimate estimate_VTE(const std::vector<EnsembleSample>& samples, double omega);

struct SpectrumLine {
  unsigned n = 0;
  unsigned m = 0;
  double V = 0.0;
  double T = 0.0;
  double E = 0.0;
};

/// V = (2n+1)(beta1+beta2) chi1 omega / 4, T = (2m+1)(beta1+beta2) chi2 omega / 4, E = V + T
/// for every 0 <= n <= n_max, 0 <= m <= m_max.
std::vector<SpectrumLine> energy_ladder(const OscillatorParams& params, unsigned n_max,
                                        unsigned m_max);

struct FilteredLine {
  SpectrumLine line;
  double mean_action = 0.0;       ///< (beta1+beta2)/4 [(2n+1) chi1 + (2m+1) chi2]
  bool survives = false;          ///< V/T agrees with <sin^2 Q>/<cos^2 Q>
  double quantized_energy = 0.0;  ///< (2n+1) beta omega / 2, for survivors
};

struct FilteredLadder {
  double ground_action = 0.0;  ///< <a_0> = (beta1+beta2)/4 from the n = m = 0 line
  double sin2 = 0.0;           ///< <sin^2 Q> recovered from the ground line
  double cos2 = 0.0;
  std::vector<FilteredLine> lines;
};

/// Recovers <sin^2 Q> and <cos^2 Q> from the n = m = 0 line, then keeps the
/// lines whose V/T ratio matches them. Throws std::invalid_argument if the
/// ground line is missing or <cos^2 Q> vanishes.
FilteredLadder consistency_filter(const std::vector<SpectrumLine>& lines,
                                  const OscillatorParams& params);

}  // namespace hoquant
