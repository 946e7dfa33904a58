#include "hoquant/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hoquant/random.hpp"

namespace hoquant {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::vector<double> to_doubles(const std::string& s) {
  std::vector<double> v;
  for (const auto& p : split(s, ',')) v.push_back(to_double(p));
  return v;
}

void check_support(const Distribution& d, double lo, double hi, const char* what) {
  auto in_range = [&](double x) { return std::isfinite(x) && x >= lo && x <= hi; };
  std::visit(
      [&](const auto& law) {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, UniformDist>) {
          if (!in_range(law.lo) || !in_range(law.hi) || !(law.lo <= law.hi))
            throw std::invalid_argument(std::string(what) + ": uniform bounds out of range");
        } else if constexpr (std::is_same_v<T, PointMass>) {
          if (!in_range(law.value))
            throw std::invalid_argument(std::string(what) + ": point mass out of range");
        } else {
          if (law.values.empty() || law.values.size() != law.weights.size())
            throw std::invalid_argument(std::string(what) +
                                        ": discrete law needs matching values and weights");
          double total = 0.0;
          for (std::size_t i = 0; i < law.values.size(); ++i) {
            if (!in_range(law.values[i]))
              throw std::invalid_argument(std::string(what) + ": discrete value out of range");
            if (!(law.weights[i] >= 0.0) || !std::isfinite(law.weights[i]))
              throw std::invalid_argument(std::string(what) + ": negative discrete weight");
            total += law.weights[i];
          }
          if (!(total > 0.0))
            throw std::invalid_argument(std::string(what) + ": discrete weights sum to zero");
        }
      },
      d);
}

}  // namespace

Distribution parse_distribution(const std::string& text) {
  if (text == "uniform-angle") return UniformDist{0.0, kTwoPi};
  const auto parts = split(text, ':');
  if (parts.empty()) throw std::invalid_argument("empty distribution spec");
  const std::string& kind = parts[0];
  if (kind == "uniform" && parts.size() == 3) return UniformDist{to_double(parts[1]), to_double(parts[2])};
  if (kind == "point" && parts.size() == 2) return PointMass{to_double(parts[1])};
  if (kind == "discrete" && parts.size() == 3) {
    DiscreteDist d{to_doubles(parts[1]), to_doubles(parts[2])};
    if (d.values.empty() || d.values.size() != d.weights.size())
      throw std::invalid_argument("discrete law needs as many weights as values: '" + text + "'");
    return d;
  }
  throw std::invalid_argument("unrecognized distribution spec '" + text +
                              "' (expected uniform:LO:HI, point:V or discrete:V,..:W,..)");
}

std::string describe(const Distribution& d) {
  std::ostringstream out;
  out.precision(17);
  std::visit(
      [&](const auto& law) {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, UniformDist>) {
          out << "uniform:" << law.lo << ':' << law.hi;
        } else if constexpr (std::is_same_v<T, PointMass>) {
          out << "point:" << law.value;
        } else {
          out << "discrete:";
          for (std::size_t i = 0; i < law.values.size(); ++i) out << (i ? "," : "") << law.values[i];
          out << ':';
          for (std::size_t i = 0; i < law.weights.size(); ++i) out << (i ? "," : "") << law.weights[i];
        }
      },
      d);
  return out.str();
}

double mean(const Distribution& d) {
  return std::visit(
      [](const auto& law) -> double {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, UniformDist>) {
          return 0.5 * (law.lo + law.hi);
        } else if constexpr (std::is_same_v<T, PointMass>) {
          return law.value;
        } else {
          const double total = std::accumulate(law.weights.begin(), law.weights.end(), 0.0);
          double s = 0.0;
          for (std::size_t i = 0; i < law.values.size(); ++i) s += law.values[i] * law.weights[i];
          return s / total;
        }
      },
      d);
}

double draw(const Distribution& d, double u) {
  return std::visit(
      [u](const auto& law) -> double {
        using T = std::decay_t<decltype(law)>;
        if constexpr (std::is_same_v<T, UniformDist>) {
          return law.lo + (law.hi - law.lo) * u;
        } else if constexpr (std::is_same_v<T, PointMass>) {
          return law.value;
        } else {
          const double total = std::accumulate(law.weights.begin(), law.weights.end(), 0.0);
          double target = u * total;
          for (std::size_t i = 0; i < law.values.size(); ++i) {
            if (target < law.weights[i]) return law.values[i];
            target -= law.weights[i];
          }
          return law.values.back();
        }
      },
      d);
}

std::vector<EnsembleSample> sample_ensemble(const Distribution& Q_dist, const Distribution& a_dist,
                                            std::size_t N, double omega, std::uint64_t seed) {
  if (N == 0) throw std::invalid_argument("ensemble size must be >= 1");
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  check_support(Q_dist, 0.0, kTwoPi, "angle distribution");
  check_support(a_dist, 0.0, std::numeric_limits<double>::max(), "action distribution");

  std::vector<EnsembleSample> out(N);
  for (std::size_t i = 0; i < N; ++i) {
    EnsembleSample& s = out[i];
    s.Q = draw(Q_dist, counter_rng::uniform01({seed, i, 0}));
    s.a = draw(a_dist, counter_rng::uniform01({seed, i, 1}));
    s.q = std::sqrt(2.0 * s.a / omega) * std::sin(s.Q);
    s.p = std::sqrt(2.0 * s.a * omega) * std::cos(s.Q);
  }
  return out;
}

VteEstimate estimate_VTE(const std::vector<EnsembleSample>& samples, double omega) {
  if (samples.empty()) throw std::invalid_argument("estimate_VTE needs at least one sample");
  const double n = static_cast<double>(samples.size());
  double sv = 0.0, st = 0.0, sa = 0.0, ss = 0.0, sc = 0.0, sv2 = 0.0, st2 = 0.0;
  double worst = 0.0;
  for (const EnsembleSample& s : samples) {
    const double v = 0.5 * omega * omega * s.q * s.q;
    const double t = 0.5 * s.p * s.p;
    sv += v;
    st += t;
    sv2 += v * v;
    st2 += t * t;
    sa += s.a;
    const double sn = std::sin(s.Q);
    const double cs = std::cos(s.Q);
    ss += sn * sn;
    sc += cs * cs;
    const double ref = s.a * omega;
    const double err = std::abs(v + t - ref) / std::max(ref, std::numeric_limits<double>::min());
    worst = std::max(worst, ref == 0.0 ? std::abs(v + t) : err);
  }
  VteEstimate e;
  e.V = sv / n;
  e.T = st / n;
  e.E = e.V + e.T;
  e.mean_action = sa / n;
  e.a_omega = e.mean_action * omega;
  e.sin2 = ss / n;
  e.cos2 = sc / n;
  e.V_factored = e.a_omega * e.sin2;
  e.T_factored = e.a_omega * e.cos2;
  const double denom = samples.size() > 1 ? n - 1.0 : 1.0;
  e.V_stderr = std::sqrt(std::max(0.0, (sv2 - n * e.V * e.V) / denom) / n);
  e.T_stderr = std::sqrt(std::max(0.0, (st2 - n * e.T * e.T) / denom) / n);
  e.max_energy_identity_error = worst;
  return e;
}

std::vector<SpectrumLine> energy_ladder(const OscillatorParams& params, unsigned n_max,
                                        unsigned m_max) {
  const double sum = params.beta1() + params.beta2();
  const double w = params.omega();
  std::vector<SpectrumLine> lines;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 0; m <= m_max; ++m) {
      SpectrumLine l{n, m, 0.0, 0.0, 0.0};
      l.V = (2.0 * n + 1.0) * sum * params.chi1() * w / 4.0;
      l.T = (2.0 * m + 1.0) * sum * params.chi2() * w / 4.0;
      l.E = sum / 4.0 * ((2.0 * n + 1.0) * params.chi1() + (2.0 * m + 1.0) * params.chi2()) * w;
      lines.push_back(l);
    }
  }
  return lines;
}

FilteredLadder consistency_filter(const std::vector<SpectrumLine>& lines,
                                  const OscillatorParams& params) {
  const auto ground = std::find_if(lines.begin(), lines.end(),
                                   [](const SpectrumLine& l) { return l.n == 0 && l.m == 0; });
  if (ground == lines.end()) throw std::invalid_argument("ladder has no n = m = 0 line");

  const double sum = params.beta1() + params.beta2();
  const double w = params.omega();
  FilteredLadder out;
  out.ground_action = sum / 4.0;
  // V = <a> omega <sin^2 Q> and T = <a> omega <cos^2 Q> on the ground line.
  out.sin2 = ground->V / (out.ground_action * w);
  out.cos2 = ground->T / (out.ground_action * w);
  if (!(out.cos2 > 0.0)) throw std::invalid_argument("<cos^2 Q> vanishes; V/T is undefined");

  for (const SpectrumLine& l : lines) {
    FilteredLine f;
    f.line = l;
    f.mean_action = sum / 4.0 * ((2.0 * l.n + 1.0) * params.chi1() + (2.0 * l.m + 1.0) * params.chi2());
    // V/T == sin2/cos2, cross-multiplied.
    const double lhs = l.V * out.cos2;
    const double rhs = l.T * out.sin2;
    f.survives = std::abs(lhs - rhs) <= 1e-12 * (std::abs(lhs) + std::abs(rhs));
    if (f.survives) f.quantized_energy = (2.0 * l.n + 1.0) * params.beta() * w / 2.0;
    out.lines.push_back(f);
  }
  return out;
}

}  // namespace hoquant
