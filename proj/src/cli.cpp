#include "hoquant/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <tbb/global_control.h>

#include "hoquant/basis.hpp"
#include "hoquant/csv.hpp"
#include "hoquant/eigensolver.hpp"
#include "hoquant/ensemble.hpp"
#include "hoquant/spectrum_fit.hpp"
#include "hoquant/stability.hpp"
#include "hoquant/transform.hpp"
#include "hoquant/variational.hpp"

namespace hoquant::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Raised when a self-check inside a subcommand fails (exit code 1).
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::optional<double> b;
  std::size_t n_points = 4001;
  double omega = 1.0;
  double beta1 = 1.0;
  double beta2 = 1.0;
  std::optional<double> alpha;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::optional<double> tolerance;
  int threads = 0;
};

/// Fully resolved configuration shared by every subcommand.
struct RunConfig {
  std::string subcommand;
  OscillatorParams params{1.0, 1.0, 1.0};
  double b = 10.0;
  std::size_t n_points = 4001;
  std::uint64_t seed = 0;
  fs::path out_dir;
  double tolerance = 0.0;
  json extra = json::object();

  Grid q_grid() const { return Grid(b, n_points); }
  Grid L_grid() const { return conjugate_grid(q_grid(), params.omega(), params.alpha()); }
};

RunConfig resolve(const std::string& name, const CommonOptions& o, double default_tolerance) {
  RunConfig c;
  c.subcommand = name;
  c.params = OscillatorParams(o.omega, o.beta1, o.beta2, o.alpha);
  c.b = o.b.value_or(10.0 / c.params.alpha());
  c.n_points = o.n_points;
  (void)Grid(c.b, c.n_points);
  if (c.n_points < 5) throw std::invalid_argument("--n-points must be at least 5");
  c.seed = o.seed;
  c.out_dir = o.out_dir;
  c.tolerance = o.tolerance.value_or(default_tolerance);
  if (!(c.tolerance >= 0.0)) throw std::invalid_argument("--tolerance must be nonnegative");
  if (o.threads < 0) throw std::invalid_argument("--threads must be >= 0");
  return c;
}

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--b", o.b, "Half-width of the q-grid (default 10/alpha)");
  app->add_option("--n-points", o.n_points, "Odd number of grid points")->capture_default_str();
  app->add_option("--omega", o.omega, "Angular frequency")->capture_default_str();
  app->add_option("--beta1", o.beta1, "Coordinate-side ladder parameter")->capture_default_str();
  app->add_option("--beta2", o.beta2, "Momentum-side ladder parameter")->capture_default_str();
  app->add_option("--alpha", o.alpha, "Hermite basis scale (default sqrt(omega/beta1))");
  app->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
  app->add_option("--tolerance", o.tolerance, "Pass/fail tolerance of the subcommand's checks");
  app->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

json manifest_for(const RunConfig& c, const std::vector<std::string>& files) {
  json m;
  m["tool"] = "hoquant";
  m["subcommand"] = c.subcommand;
  m["grid"] = {{"b", c.b}, {"n_points", c.n_points}};
  m["oscillator"] = {{"omega", c.params.omega()},
                     {"beta1", c.params.beta1()},
                     {"beta2", c.params.beta2()},
                     {"alpha", c.params.alpha()}};
  m["seed"] = c.seed;
  m["tolerance"] = c.tolerance;
  m["parameters"] = c.extra;
  m["files"] = files;

  // Equivalent invocation with every default spelled out.
  std::vector<std::string> argv{"hoquant", c.subcommand};
  auto arg = [&](const std::string& flag, const std::string& value) {
    argv.push_back(flag);
    argv.push_back(value);
  };
  arg("--b", format_number(c.b));
  arg("--n-points", std::to_string(c.n_points));
  arg("--omega", format_number(c.params.omega()));
  arg("--beta1", format_number(c.params.beta1()));
  arg("--beta2", format_number(c.params.beta2()));
  arg("--alpha", format_number(c.params.alpha()));
  arg("--seed", std::to_string(c.seed));
  arg("--tolerance", format_number(c.tolerance));
  for (const auto& [key, value] : c.extra.items()) {
    if (key.rfind("_", 0) == 0) continue;
    std::string flag = "--" + key;
    for (char& ch : flag)
      if (ch == '_') ch = '-';
    if (value.is_string())
      arg(flag, value.get<std::string>());
    else if (value.is_number_float())
      arg(flag, format_number(value.get<double>()));
    else if (value.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < value.size(); ++i)
        joined += (i ? "," : "") + format_number(value[i].get<double>());
      arg(flag, joined);
    } else
      arg(flag, value.dump());
  }
  m["command"] = argv;
  return m;
}

void write_manifest(const RunConfig& c, const std::vector<std::string>& files) {
  std::ofstream out(c.out_dir / "manifest.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest in " + c.out_dir.string());
  out << manifest_for(c, files).dump(2) << '\n';
}

// ---------------------------------------------------------------- eec

struct EecOptions {
  unsigned max_mode = 3;
  double superposition_c = 0.5;
  double perturbed_tolerance = 1e-3;
};

int cmd_eec(const RunConfig& c, const EecOptions& o) {
  const Grid qg = c.q_grid();
  const Grid Lg = c.L_grid();
  const double w = c.params.omega();

  struct State {
    std::string name;
    ConjugatePair pair;
    double tolerance;
    bool expected_pass;
  };
  std::vector<State> states;
  for (unsigned n = 0; n <= o.max_mode; ++n)
    states.push_back({"mode_" + std::to_string(n), mode_pair(n, c.params, qg, Lg), c.tolerance, true});

  const GridFunction psi0 = hermite_mode(0, c.params.alpha(), qg);
  const GridFunction psi1 = hermite_mode(1, c.params.alpha(), qg);
  const double sc = o.superposition_c;
  states.push_back({"superposition_c" + format_number(sc),
                    make_consistent_pair(psi0 * complex(std::sqrt(sc)) +
                                             psi1 * complex(std::sqrt(1.0 - sc)),
                                         w, Lg),
                    c.tolerance, true});

  StabilityConfig sconf;
  sconf.c = 1.0;
  sconf.alpha = c.params.alpha();
  sconf.b = c.b;
  sconf.n_points = c.n_points;
  sconf.seed = c.seed;
  sconf.num_trials = 1;
  states.push_back({"perturbed_mode_0",
                    make_consistent_pair(psi0 + perturbation(psi0, sconf, 0), w, Lg),
                    o.perturbed_tolerance, true});

  GridFunction tail = psi0;
  for (std::size_t i = 0; i < tail.size(); ++i) tail[i] += 0.01;
  states.push_back({"nondecaying_tail", ConjugatePair{tail, forward(psi0, w, Lg), w, false},
                    c.tolerance, false});

  CsvWriter csv(c.out_dir / "eec_report.csv",
                {"state", "residual", "value", "tolerance", "within_tolerance", "state_passes",
                 "state_expected_pass"});
  bool all_match = true;
  for (const State& s : states) {
    const EecReport r = eec_report(s.pair);
    const bool passes = r.passes(s.tolerance);
    all_match = all_match && (passes == s.expected_pass);
    const std::pair<const char*, double> rows[] = {
        {"norm_psi", r.r_norm_psi},     {"decay_psi", r.r_decay_psi},
        {"decay_F_integral", r.r_decay_Fint}, {"norm_F", r.r_norm_F},
        {"parseval_F", r.r_parseval_F}, {"parseval_psi", r.r_parseval_psi}};
    for (const auto& [name, value] : rows) {
      csv.field(s.name).field(name).field(value).field(s.tolerance);
      csv.field(value <= s.tolerance ? 1 : 0).field(passes ? 1 : 0).field(s.expected_pass ? 1 : 0);
      csv.end_row();
    }
  }
  write_manifest(c, {"eec_report.csv"});
  if (!all_match) throw AssertionFailure("eec: some states did not meet their expected outcome");
  return kOk;
}

// ---------------------------------------------------------------- eigen

int cmd_eigen(const RunConfig& c, unsigned k) {
  const std::vector<EigenPair> pairs = solve_eq16(c.params, c.q_grid(), k);
  CsvWriter csv(c.out_dir / "eigenvalues.csv", {"n", "gamma_numeric", "gamma_analytic", "rel_error"});
  bool ok = true;
  for (const EigenPair& p : pairs) {
    const double analytic = c.params.gamma(p.index);
    const double rel = std::abs(p.eigenvalue - analytic) / analytic;
    ok = ok && rel <= c.tolerance;
    csv.field(p.index).field(p.eigenvalue).field(analytic).field(rel);
    csv.end_row();
  }
  write_manifest(c, {"eigenvalues.csv"});
  if (!ok) throw AssertionFailure("eigen: relative error above tolerance");
  return kOk;
}

// ---------------------------------------------------------------- fig1

struct Fig1Options {
  std::vector<double> c_list = default_c_sweep();
  unsigned trials = 80;
  unsigned modes = 200;
  double rho_max = 5e-5;
};

const char* kPlotScript = R"PY(# Plots w_i against trial index, one series per c.
# Usage: python3 fig1_plot.py [output.png]
import csv
import sys
from collections import OrderedDict

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

series = OrderedDict()
with open("fig1_trials.csv") as fh:
    for row in csv.DictReader(fh):
        series.setdefault(row["c"], []).append((int(row["trial_index"]) + 1, float(row["w_i"])))

fig, ax = plt.subplots(figsize=(7, 4.5))
for c, pts in series.items():
    xs, ys = zip(*pts)
    ax.plot(xs, ys, marker="o", markersize=2.5, linewidth=0.8, label="c = " + c)
ax.set_xlabel("i")
ax.set_ylabel("w_i")
ax.ticklabel_format(axis="y", style="sci", scilimits=(0, 0))
ax.legend(fontsize=7, ncol=3)
fig.tight_layout()
fig.savefig(sys.argv[1] if len(sys.argv) > 1 else "fig1.png", dpi=150)
)PY";

int cmd_fig1(const RunConfig& c, const Fig1Options& o) {
  if (o.c_list.empty()) throw std::invalid_argument("--c-list must not be empty");
  std::vector<StabilityConfig> configs;
  for (double cv : o.c_list) {
    StabilityConfig s;
    s.c = cv;
    s.num_modes = o.modes;
    s.rho_max = o.rho_max;
    s.num_trials = o.trials;
    s.b = c.b;
    s.n_points = c.n_points;
    s.alpha = c.params.alpha();
    s.seed = c.seed;
    s.validate();
    configs.push_back(s);
  }
  const std::vector<StabilityResult> results = run_experiment(configs);

  CsvWriter trials(c.out_dir / "fig1_trials.csv", {"c", "trial_index", "w_i"});
  CsvWriter summary(c.out_dir / "fig1_summary.csv", {"c", "mean", "std", "max_abs"});
  for (const StabilityResult& r : results) {
    for (std::size_t i = 0; i < r.w.size(); ++i) {
      trials.field(r.config.c).field(static_cast<unsigned long long>(i)).field(r.w[i]);
      trials.end_row();
    }
    summary.field(r.config.c).field(r.summary.mean).field(r.summary.std).field(r.summary.max_abs);
    summary.end_row();
  }
  std::ofstream(c.out_dir / "fig1_plot.py", std::ios::binary) << kPlotScript;
  write_manifest(c, {"fig1_trials.csv", "fig1_summary.csv", "fig1_plot.py"});
  return kOk;
}

// ---------------------------------------------------------------- ladder

int cmd_ladder(const RunConfig& c, unsigned n_max, unsigned m_max) {
  const FilteredLadder f = consistency_filter(energy_ladder(c.params, n_max, m_max), c.params);
  CsvWriter csv(c.out_dir / "spectrum.csv",
                {"n", "m", "V", "T", "E", "mean_action", "survives", "quantized_energy"});
  bool ok = true;
  for (const FilteredLine& l : f.lines) {
    ok = ok && (l.survives == (l.line.n == l.line.m));
    csv.field(l.line.n).field(l.line.m).field(l.line.V).field(l.line.T).field(l.line.E);
    csv.field(l.mean_action).field(l.survives ? 1 : 0).field(l.quantized_energy);
    csv.end_row();
  }
  write_manifest(c, {"spectrum.csv"});
  if (!ok) throw AssertionFailure("ladder: survivors are not exactly the m = n lines");
  return kOk;
}

// ---------------------------------------------------------------- ensemble

struct EnsembleOptions {
  std::size_t samples = 1000000;
  std::string a_dist = "point:1";
  std::string Q_dist = "uniform-angle";
  std::size_t export_samples = 0;
};

constexpr std::size_t kMaxExportedSamples = 100000;

int cmd_ensemble(const RunConfig& c, const EnsembleOptions& o) {
  if (o.export_samples > kMaxExportedSamples)
    throw std::invalid_argument("--export-samples is capped at " + std::to_string(kMaxExportedSamples));
  const Distribution Qd = parse_distribution(o.Q_dist);
  const Distribution ad = parse_distribution(o.a_dist);
  const double w = c.params.omega();
  const std::vector<EnsembleSample> samples = sample_ensemble(Qd, ad, o.samples, w, c.seed);
  const VteEstimate e = estimate_VTE(samples, w);

  CsvWriter csv(c.out_dir / "ensemble_check.csv",
                {"N", "V", "T", "E", "a_omega", "V_factored", "T_factored", "V_deviation",
                 "T_deviation", "V_stderr", "T_stderr", "E_over_a_omega",
                 "max_energy_identity_error"});
  csv.field(static_cast<unsigned long long>(samples.size()))
      .field(e.V)
      .field(e.T)
      .field(e.E)
      .field(e.a_omega)
      .field(e.V_factored)
      .field(e.T_factored)
      .field(e.V - e.V_factored)
      .field(e.T - e.T_factored)
      .field(e.V_stderr)
      .field(e.T_stderr)
      .field(e.E / e.a_omega)
      .field(e.max_energy_identity_error);
  csv.end_row();

  std::vector<std::string> files{"ensemble_check.csv"};
  if (o.export_samples > 0) {
    CsvWriter s(c.out_dir / "ensemble_samples.csv", {"index", "Q", "a", "q", "p"});
    for (std::size_t i = 0; i < std::min(o.export_samples, samples.size()); ++i) {
      s.field(static_cast<unsigned long long>(i)).field(samples[i].Q).field(samples[i].a);
      s.field(samples[i].q).field(samples[i].p);
      s.end_row();
    }
    files.push_back("ensemble_samples.csv");
  }
  write_manifest(c, files);
  if (e.max_energy_identity_error > c.tolerance)
    throw AssertionFailure("ensemble: samplewise energy identity violated");
  return kOk;
}

// ---------------------------------------------------------------- fit

struct FitOptions {
  std::string data;
  std::string model = "photoelectric";
  SynthSpec synth{1.0545718e-34, 3.5e-19, 4e15, 1.2e16, 100, 0.0, 0};
};

int cmd_fit(const RunConfig& c, FitOptions o) {
  if (o.model != "photoelectric" && o.model != "origin")
    throw std::invalid_argument("--model must be 'photoelectric' or 'origin'");
  std::vector<std::string> files;
  FrequencyEnergyData data;
  const bool synthetic = o.data.empty();
  if (synthetic) {
    o.synth.seed = c.seed;
    data = synth_data(o.synth);
    std::ofstream out(c.out_dir / "synthetic.csv", std::ios::binary);
    write_csv(out, data);
    files.push_back("synthetic.csv");
  } else {
    std::ifstream in(o.data);
    if (!in) throw std::invalid_argument("cannot read --data file " + o.data);
    try {
      data = read_csv(in);
    } catch (const std::runtime_error& e) {
      throw std::invalid_argument(o.data + ": " + e.what());
    }
  }
  const FitResult r = o.model == "photoelectric" ? fit_photoelectric(data) : fit_beta(data);

  CsvWriter csv(c.out_dir / "fit.csv", {"model", "rows", "beta_hat", "work_function", "rms_residual"});
  csv.field(o.model).field(static_cast<unsigned long long>(data.rows.size()));
  csv.field(r.beta_hat).field(r.work_function).field(r.rms_residual);
  csv.end_row();
  files.push_back("fit.csv");
  {
    std::ofstream txt(c.out_dir / "fit.txt", std::ios::binary);
    txt << "model=" << o.model << "\nrows=" << data.rows.size()
        << "\nbeta_hat=" << format_number(r.beta_hat)
        << "\nwork_function=" << format_number(r.work_function)
        << "\nrms_residual=" << format_number(r.rms_residual) << '\n';
    files.push_back("fit.txt");
  }
  write_manifest(c, files);

  if (synthetic && o.synth.noise_level == 0.0) {
    const double rel = std::abs(r.beta_hat - o.synth.beta_true) / o.synth.beta_true;
    if (rel > c.tolerance) throw AssertionFailure("fit: noiseless beta recovery outside tolerance");
  }
  return kOk;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number in list: '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("bad number in list: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Constrained-functional oscillator experiments: EEC checks, eigen ladders, "
               "normalization-drift sweeps, energy ladder filtering, ensembles and beta fits."};
  app.require_subcommand(1);

  CommonOptions common;
  EecOptions eec;
  unsigned eigen_k = 8;
  Fig1Options fig1;
  std::string c_list;
  unsigned n_max = 3, m_max = 3;
  EnsembleOptions ens;
  FitOptions fit;

  auto* s_eec = app.add_subcommand("eec", "Equilibrium-condition residuals of modes and test states");
  add_common(s_eec, common);
  s_eec->add_option("--max-mode", eec.max_mode, "Highest mode pair checked")->capture_default_str();
  s_eec->add_option("--superposition-c", eec.superposition_c, "Weight of psi_0 in the superposition")
      ->capture_default_str();
  s_eec->add_option("--perturbed-tolerance", eec.perturbed_tolerance,
                    "Tolerance for the randomly perturbed mode")
      ->capture_default_str();

  auto* s_eigen = app.add_subcommand("eigen", "Finite-difference eigenvalue ladder");
  add_common(s_eigen, common);
  s_eigen->add_option("--k", eigen_k, "Number of eigenpairs")->capture_default_str();

  auto* s_fig1 = app.add_subcommand("fig1", "Normalization-drift sweep over superposition weights");
  add_common(s_fig1, common);
  s_fig1->add_option("--c-list", c_list, "Comma-separated weights of psi_0");
  s_fig1->add_option("--trials", fig1.trials, "Trials per c")->capture_default_str();
  s_fig1->add_option("--modes", fig1.modes, "Sinusoids per perturbation")->capture_default_str();
  s_fig1->add_option("--rho-max", fig1.rho_max, "Coefficient bound")->capture_default_str();

  auto* s_ladder = app.add_subcommand("ladder", "Energy ladder and m = n consistency filter");
  add_common(s_ladder, common);
  s_ladder->add_option("--n-max", n_max, "Largest n")->capture_default_str();
  s_ladder->add_option("--m-max", m_max, "Largest m")->capture_default_str();

  auto* s_ens = app.add_subcommand("ensemble", "Action-angle ensemble estimators");
  add_common(s_ens, common);
  s_ens->add_option("--samples", ens.samples, "Ensemble size")->capture_default_str();
  s_ens->add_option("--a-dist", ens.a_dist, "Action law")->capture_default_str();
  s_ens->add_option("--q-dist", ens.Q_dist, "Angle law")->capture_default_str();
  s_ens->add_option("--export-samples", ens.export_samples, "Write the first N samples")
      ->capture_default_str();

  auto* s_fit = app.add_subcommand("fit", "Fit beta in energy = beta * omega (- W)");
  add_common(s_fit, common);
  s_fit->add_option("--data", fit.data, "CSV with columns omega,energy (angular frequency)");
  s_fit->add_option("--model", fit.model, "photoelectric or origin")->capture_default_str();
  s_fit->add_option("--beta-true", fit.synth.beta_true, "Synthetic beta")->capture_default_str();
  s_fit->add_option("--work-function", fit.synth.work_function, "Synthetic W")->capture_default_str();
  s_fit->add_option("--omega-min", fit.synth.omega_min, "Synthetic omega range start")
      ->capture_default_str();
  s_fit->add_option("--omega-max", fit.synth.omega_max, "Synthetic omega range end")
      ->capture_default_str();
  s_fit->add_option("--rows", fit.synth.n_rows, "Synthetic row count")->capture_default_str();
  s_fit->add_option("--noise", fit.synth.noise_level, "Relative Gaussian noise")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const double default_tol = name == "eec"        ? 1e-7
                               : name == "eigen"    ? 1e-5
                               : name == "ensemble" ? 1e-12
                               : name == "fit"      ? 1e-10
                                                    : 0.0;
    RunConfig config = resolve(name, common, default_tol);
    std::unique_ptr<tbb::global_control> limit;
    if (common.threads > 0)
      limit = std::make_unique<tbb::global_control>(tbb::global_control::max_allowed_parallelism,
                                                    static_cast<std::size_t>(common.threads));
    fs::create_directories(config.out_dir);

    if (name == "eec") {
      config.extra = {{"max_mode", eec.max_mode},
                      {"superposition_c", eec.superposition_c},
                      {"perturbed_tolerance", eec.perturbed_tolerance}};
      return cmd_eec(config, eec);
    }
    if (name == "eigen") {
      config.extra = {{"k", eigen_k}};
      return cmd_eigen(config, eigen_k);
    }
    if (name == "fig1") {
      if (!c_list.empty()) fig1.c_list = parse_list(c_list);
      config.extra = {{"c_list", fig1.c_list},
                      {"trials", fig1.trials},
                      {"modes", fig1.modes},
                      {"rho_max", fig1.rho_max}};
      return cmd_fig1(config, fig1);
    }
    if (name == "ladder") {
      config.extra = {{"n_max", n_max}, {"m_max", m_max}};
      return cmd_ladder(config, n_max, m_max);
    }
    if (name == "ensemble") {
      config.extra = {{"samples", ens.samples},
                      {"a_dist", ens.a_dist},
                      {"q_dist", ens.Q_dist},
                      {"export_samples", ens.export_samples}};
      return cmd_ensemble(config, ens);
    }
    if (name == "fit") {
      config.extra = {{"model", fit.model}};
      if (fit.data.empty()) {
        config.extra["beta_true"] = fit.synth.beta_true;
        config.extra["work_function"] = fit.synth.work_function;
        config.extra["omega_min"] = fit.synth.omega_min;
        config.extra["omega_max"] = fit.synth.omega_max;
        config.extra["rows"] = fit.synth.n_rows;
        config.extra["noise"] = fit.synth.noise_level;
      } else {
        config.extra["data"] = fit.data;
      }
      return cmd_fit(config, fit);
    }
    return kUsageError;
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kAssertionFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAssertionFailed;
  }
}

}  // namespace hoquant::cli
