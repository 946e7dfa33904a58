// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. argv[1] is the path of the hoquant executable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "direction_oracle.hpp"
#include "hoquant/basis.hpp"
#include "hoquant/eigensolver.hpp"
#include "hoquant/ensemble.hpp"
#include "hoquant/random.hpp"
#include "hoquant/spectrum_fit.hpp"
#include "hoquant/stability.hpp"
#include "hoquant/transform.hpp"
#include "hoquant/variational.hpp"

using namespace hoquant;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

ConjugatePair superposition(double c, const OscillatorParams& p, const Grid& q) {
  const GridFunction s = hermite_mode(0, p.alpha(), q) * complex(std::sqrt(c)) +
                         hermite_mode(1, p.alpha(), q) * complex(std::sqrt(1.0 - c));
  return make_consistent_pair(s, p.omega(), conjugate_grid(q, p.omega(), p.alpha()));
}

Outcome eigen_ladder() {
  Outcome o;
  for (auto [beta1, omega] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}, std::pair{0.5, 1.7}}) {
    const OscillatorParams p(omega, beta1, 1.0);
    const auto t0 = Clock::now();
    const auto pairs = solve_eq16(p, Grid(12.0, 4001), 9);
    const double elapsed = seconds_since(t0);
    double worst = 0.0;
    for (const auto& e : pairs)
      worst = std::max(worst, std::abs(e.eigenvalue - (2.0 * e.index + 1.0) * beta1 * omega / 2.0) /
                                  ((2.0 * e.index + 1.0) * beta1 * omega / 2.0));
    o.require(pairs.size() == 9 && worst <= 1e-5 && elapsed < 5.0,
              "beta1=" + fmt("%g", beta1) + " omega=" + fmt("%g", omega) + " rel " + fmt("%.2e", worst) +
                  " in " + fmt("%.2f", elapsed) + "s");
  }
  return o;
}

Outcome eec_satisfaction() {
  Outcome o;
  const OscillatorParams p(1.0, 1.0, 1.0);
  const Grid q(10.0, 4001);
  const Grid L = conjugate_grid(q, 1.0, 1.0);
  double worst = 0.0;
  for (unsigned n = 0; n <= 5; ++n) worst = std::max(worst, eec_report(mode_pair(n, p, q, L)).worst());
  o.require(worst <= 1e-7, "modes 0-5 worst " + fmt("%.2e", worst));

  double worst_pert = 0.0;
  for (double c : {1.0, 0.5, 0.0}) {
    StabilityConfig cfg;
    cfg.c = c;
    cfg.num_trials = 5;
    const GridFunction base = base_state(cfg, q);
    for (std::uint64_t t = 0; t < cfg.num_trials; ++t)
      worst_pert = std::max(worst_pert,
                            eec_report(make_consistent_pair(base + perturbation(base, cfg, t), 1.0, L)).worst());
  }
  o.require(worst_pert <= 1e-3, "perturbed worst " + fmt("%.2e", worst_pert));
  return o;
}

Outcome stationarity_contrast() {
  Outcome o;
  const OscillatorParams p(1.0, 1.0, 1.0);
  const Grid q(10.0, 4001);
  double worst_mode = 0.0;
  for (unsigned n = 0; n <= 3; ++n) worst_mode = std::max(worst_mode, stationarity_probe(mode_pair(n, p, q), p, 100, 0));
  o.require(worst_mode <= 1e-6, "modes 0-3 max " + fmt("%.2e", worst_mode));

  double least_super = INFINITY, least_oracle = INFINITY;
  for (double c : {0.1, 0.5, 0.9}) {
    const ConjugatePair s = superposition(c, p, q);
    least_super = std::min(least_super, stationarity_probe(s, p, 100, 0));
    least_oracle = std::min(least_oracle, oracle::unconstrained_residual(s, 30, 0));
  }
  o.require(least_super >= 1e-3, "superpositions min " + fmt("%.3f", least_super));
  o.require(least_oracle >= 1e-3, "brute-force ensemble min " + fmt("%.3f", least_oracle));
  return o;
}

Outcome fig1() {
  Outcome o;
  std::vector<StabilityConfig> cfgs;
  for (double c : default_c_sweep()) {
    StabilityConfig s;
    s.c = c;
    cfgs.push_back(s);
  }
  const auto t0 = Clock::now();
  const auto res = run_experiment(cfgs);
  const double elapsed = seconds_since(t0);

  double edge_max = 0.0, std_half = 0.0, std_one = 0.0;
  for (const auto& r : res) {
    if (r.config.c == 0.0 || r.config.c == 1.0) edge_max = std::max(edge_max, r.summary.max_abs);
    if (r.config.c == 0.5) std_half = r.summary.std;
    if (r.config.c == 1.0) std_one = r.summary.std;
  }
  const double k_half = std_half / 0.5;
  double spread = 0.0;
  for (const auto& r : res) {
    const double c = r.config.c;
    if (c == 0.0 || c == 1.0) continue;
    spread = std::max(spread, std::abs(r.summary.std / std::sqrt(c * (1.0 - c)) / k_half - 1.0));
  }
  o.require(edge_max <= 5e-7, "max|w| at c in {0,1} " + fmt("%.2e", edge_max));
  o.require(std_half >= 100.0 * std_one, "std ratio c=0.5/c=1 " + fmt("%.0f", std_half / std_one));
  o.require(spread <= 0.2, "sqrt(c(1-c)) scaling deviation " + fmt("%.3f", spread));
  o.require(elapsed < 60.0, "runtime " + fmt("%.2f", elapsed) + "s");
  return o;
}

Outcome parseval() {
  Outcome o;
  const OscillatorParams p(1.0, 1.0, 1.0);
  double worst = 0.0, least_ratio = INFINITY;
  for (unsigned n = 0; n <= 3; ++n) {
    const auto r1 = parseval_residuals(mode_pair(n, p, Grid(10.0, 4001)));
    const auto r2 = parseval_residuals(mode_pair(n, p, Grid(10.0, 8001)));
    worst = std::max({worst, r1.r8, r1.r9});
    least_ratio = std::min({least_ratio, r1.r8 / r2.r8, r1.r9 / r2.r9});
  }
  o.require(worst <= 1e-8, "residual " + fmt("%.2e", worst));
  o.require(least_ratio >= 4.0, "shrink on doubling " + fmt("%.1f", least_ratio) + "x");
  return o;
}

Outcome ladder() {
  Outcome o;
  const double omega = 1.3;
  for (auto [b1, b2] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}, std::pair{3.0, 0.25}}) {
    const OscillatorParams p(omega, b1, b2);
    const FilteredLadder f = consistency_filter(energy_ladder(p, 5, 5), p);
    const double beta = 0.5 * (b1 + b2);
    bool exact = true;
    double err = 0.0;
    std::vector<double> energies(6, NAN);
    for (const auto& l : f.lines) {
      exact = exact && (l.survives == (l.line.n == l.line.m));
      if (!l.survives) continue;
      energies[l.line.n] = l.line.E;
      const double expected = (2.0 * l.line.n + 1.0) * beta * omega / 2.0;
      err = std::max(err, std::abs(l.line.E - expected) / expected);
      // <a> from the ladder against (beta1+beta2)/4 [(2n+1) chi1 + (2m+1) chi2]
      const double a_ref = (b1 + b2) / 4.0 * ((2.0 * l.line.n + 1.0) * b1 / (b1 + b2) +
                                              (2.0 * l.line.m + 1.0) * b2 / (b1 + b2));
      err = std::max(err, std::abs(l.mean_action - a_ref) / a_ref);
    }
    for (int n = 1; n <= 5; ++n)
      err = std::max(err, std::abs(energies[n] - energies[n - 1] - beta * omega) / (beta * omega));
    o.require(exact && err <= 1e-14,
              "beta1=" + fmt("%g", b1) + " beta2=" + fmt("%g", b2) + " rel " + fmt("%.1e", err));
  }
  return o;
}

Outcome ensemble() {
  Outcome o;
  const double omega = 1.0;
  const auto angle = parse_distribution("uniform-angle");
  const auto action = parse_distribution("uniform:0.5:1.5");
  const VteEstimate e = estimate_VTE(sample_ensemble(angle, action, 1000000, omega, 0), omega);
  const double zv = std::abs(e.V - e.V_factored) / e.V_stderr;
  const double zt = std::abs(e.T - e.T_factored) / e.T_stderr;
  o.require(zv <= 3.0 && zt <= 3.0, "factored forms within " + fmt("%.2f", std::max(zv, zt)) + " s.e.");
  o.require(e.max_energy_identity_error <= 1e-12,
            "samplewise identity " + fmt("%.1e", e.max_energy_identity_error));

  // RMS error of V against its exact value <a> omega / 2 over independent
  // replicates, at N = 1e3 .. 1e6; slope of log rms against log N.
  const auto point = parse_distribution("point:1");
  const std::vector<std::pair<std::size_t, unsigned>> plan = {
      {1000, 400}, {10000, 200}, {100000, 100}, {1000000, 40}};
  std::vector<double> x, y;
  for (auto [n, reps] : plan) {
    double ss = 0.0;
    for (unsigned r = 0; r < reps; ++r) {
      const auto s = sample_ensemble(angle, point, n, omega, counter_rng::hash({n, r}));
      const double dv = estimate_VTE(s, omega).V - 0.5 * omega;
      ss += dv * dv;
    }
    x.push_back(std::log(static_cast<double>(n)));
    y.push_back(0.5 * std::log(ss / reps));
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / x.size();
    my += y[i] / y.size();
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  o.require(std::abs(slope + 0.5) <= 0.05, "MC error slope " + fmt("%.3f", slope));
  return o;
}

Outcome beta_recovery() {
  Outcome o;
  SynthSpec s;
  s.omega_min = 4e15;
  s.omega_max = 1.2e16;
  s.n_rows = 100;
  const double origin = std::abs(fit_beta(synth_data(s)).beta_hat / s.beta_true - 1.0);
  o.require(origin <= 1e-10, "noiseless origin " + fmt("%.1e", origin));

  s.work_function = 3.5e-19;
  const FitResult pe = fit_photoelectric(synth_data(s));
  const double pe_b = std::abs(pe.beta_hat / s.beta_true - 1.0);
  const double pe_w = std::abs(pe.work_function / s.work_function - 1.0);
  o.require(pe_b <= 1e-10 && pe_w <= 1e-10,
            "noiseless photoelectric beta " + fmt("%.1e", pe_b) + " W " + fmt("%.1e", pe_w));

  s.noise_level = 0.01;
  double worst_b = 0.0, worst_w = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    s.seed = seed;
    const FitResult f = fit_photoelectric(synth_data(s));
    worst_b = std::max(worst_b, std::abs(f.beta_hat / s.beta_true - 1.0));
    worst_w = std::max(worst_w, std::abs(f.work_function / s.work_function - 1.0));
  }
  o.require(worst_b <= 0.01, "1% noise beta worst " + fmt("%.4f", worst_b));
  o.require(worst_w <= 0.05, "1% noise W worst " + fmt("%.4f", worst_w));
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const std::string& exe) {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / "hoquant_acceptance";
  fs::remove_all(root);
  const std::vector<std::string> cmds = {"eec", "eigen", "fig1", "ladder", "ensemble", "fit --noise 0.01"};
  for (const std::string& cmd : cmds) {
    const std::string name = cmd.substr(0, cmd.find(' '));
    std::vector<fs::path> dirs;
    bool ran = true;
    for (const char* threads : {"1", "1", "4"}) {
      const fs::path d = root / (name + "_" + std::to_string(dirs.size()));
      const std::string line = "\"" + exe + "\" " + cmd + " --seed 7 --threads " + threads +
                               " --out-dir \"" + d.string() + "\" > /dev/null";
      ran = ran && std::system(line.c_str()) == 0;
      dirs.push_back(d);
    }
    bool same = ran;
    std::size_t files = 0;
    if (ran) {
      for (const auto& entry : fs::directory_iterator(dirs[0])) {
        ++files;
        const std::string ref = slurp(entry.path());
        for (std::size_t k = 1; k < dirs.size(); ++k) same = same && slurp(dirs[k] / entry.path().filename()) == ref;
      }
    }
    o.require(same && files > 0, name + " (" + std::to_string(files) + " files)");
  }
  fs::remove_all(root);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-hoquant>\n");
    return 2;
  }
  const std::string exe = argv[1];
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"eigenvalue ladder", eigen_ladder},
      {"equilibrium conditions", eec_satisfaction},
      {"stationarity contrast", stationarity_contrast},
      {"normalization drift sweep", fig1},
      {"derivative Parseval identities", parseval},
      {"energy ladder filter", ladder},
      {"ensemble identities", ensemble},
      {"beta recovery", beta_recovery},
      {"CLI determinism", [&] { return determinism(exe); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s [%.1fs]: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
