#include "hoquant/spectrum_fit.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hoquant/csv.hpp"
#include "hoquant/random.hpp"

namespace hoquant {

namespace {

double rms(const FrequencyEnergyData& data, double beta, double work_function) {
  double ss = 0.0;
  for (const auto& r : data.rows) {
    const double e = r.energy - (beta * r.omega - work_function);
    ss += e * e;
  }
  return std::sqrt(ss / static_cast<double>(data.rows.size()));
}

}  // namespace

FitResult fit_beta(const FrequencyEnergyData& data) {
  if (data.rows.empty()) throw std::invalid_argument("fit_beta needs at least one row");
  double sxy = 0.0, sxx = 0.0;
  for (const auto& r : data.rows) {
    sxy += r.omega * r.energy;
    sxx += r.omega * r.omega;
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_beta: degenerate design (all omega zero)");
  FitResult f;
  f.beta_hat = sxy / sxx;
  f.rms_residual = rms(data, f.beta_hat, 0.0);
  return f;
}

FitResult fit_photoelectric(const FrequencyEnergyData& data) {
  std::set<double> distinct;
  for (const auto& r : data.rows) distinct.insert(r.omega);
  if (distinct.size() < 2)
    throw std::invalid_argument("fit_photoelectric: rank-deficient design (needs two distinct omega)");

  const double n = static_cast<double>(data.rows.size());
  double mx = 0.0, my = 0.0;
  for (const auto& r : data.rows) {
    mx += r.omega;
    my += r.energy;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : data.rows) {
    sxx += (r.omega - mx) * (r.omega - mx);
    sxy += (r.omega - mx) * (r.energy - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_photoelectric: rank-deficient design");
  FitResult f;
  f.beta_hat = sxy / sxx;
  f.work_function = f.beta_hat * mx - my;
  f.rms_residual = rms(data, f.beta_hat, f.work_function);
  return f;
}

FrequencyEnergyData synth_data(const SynthSpec& spec) {
  if (!(spec.omega_min > 0.0) || !(spec.omega_max >= spec.omega_min))
    throw std::invalid_argument("synth_data: omega range must be positive and ordered");
  if (spec.n_rows < 1) throw std::invalid_argument("synth_data: n_rows must be >= 1");
  if (!(spec.noise_level >= 0.0)) throw std::invalid_argument("synth_data: noise must be >= 0");

  FrequencyEnergyData data;
  data.noise_level = spec.noise_level;
  data.seed = spec.seed;
  for (std::size_t k = 0; k < spec.n_rows; ++k) {
    const double t = spec.n_rows == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(spec.n_rows - 1);
    const double omega = spec.omega_min + t * (spec.omega_max - spec.omega_min);
    double y = spec.beta_true * omega - spec.work_function;
    if (!(y > 0.0)) continue;
    if (spec.noise_level > 0.0) y *= 1.0 + spec.noise_level * counter_rng::normal(spec.seed, k);
    if (!(y > 0.0)) continue;
    data.rows.push_back({omega, y});
  }
  return data;
}

void write_csv(std::ostream& out, const FrequencyEnergyData& data) {
  out << "omega,energy\n";
  for (const auto& r : data.rows) out << format_number(r.omega) << ',' << format_number(r.energy) << '\n';
}

FrequencyEnergyData read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "omega,energy") throw std::runtime_error("expected header 'omega,energy', got '" + line + "'");
  FrequencyEnergyData data;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("line " + std::to_string(lineno) + ": missing comma");
    try {
      std::size_t p1 = 0, p2 = 0;
      const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
      const double omega = std::stod(a, &p1);
      const double energy = std::stod(b, &p2);
      if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("trailing characters");
      if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
      data.rows.push_back({omega, energy});
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return data;
}

}  // namespace hoquant
