// Command-line front end: spectrum, spacing, rstat, otoc, overlap and sweep
// subcommands over the library, with CSV outputs and sidecar metadata.
//
// Exit codes: 0 success, 1 usage error, 2 convergence failure, 3 resume
// mismatch.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "admdiag/diagnostics.hpp"
#include "admdiag/io.hpp"
#include "admdiag/model.hpp"
#include "admdiag/otoc.hpp"
#include "admdiag/overlap.hpp"
#include "admdiag/spectra.hpp"
#include "admdiag/sweep.hpp"

namespace {

using namespace admdiag;

struct CommonOpts {
  double omega = 1.0;
  double omega0 = 1.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double j = 10.0;
  std::string nmax = "auto";
  double tol = 1e-8;
  int ceiling = 5000;
  std::string parity = "+";
  std::string window = "200:1000";
  std::optional<double> lambda;
  std::string out = ".";
};

void add_common_options(CLI::App* cmd, CommonOpts& o, double default_j = 10.0) {
  o.j = default_j;
  cmd->add_option("--omega", o.omega, "Field frequency")->capture_default_str();
  cmd->add_option("--omega0", o.omega0, "Atomic level splitting")->capture_default_str();
  cmd->add_option("--g1", o.g1, "Co-rotating coupling")->capture_default_str();
  cmd->add_option("--g2", o.g2, "Counter-rotating coupling")->capture_default_str();
  cmd->add_option("--j", o.j, "Pseudospin length (half-integer)")->capture_default_str();
  cmd->add_option("--nmax", o.nmax, "Fock cutoff: auto or a non-negative integer")
      ->capture_default_str();
  cmd->add_option("--tol", o.tol, "Cutoff convergence tolerance")->capture_default_str();
  cmd->add_option("--ceiling", o.ceiling, "Largest cutoff attempted")->capture_default_str();
  cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
  cmd->add_option("--config", "Configuration file with key = value lines; flags override")
      ->expected(1);
}

void add_sector_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--parity", o.parity, "Parity sector: + or -")
      ->check(CLI::IsMember({"+", "-", "+1", "-1"}))
      ->capture_default_str();
  cmd->add_option("--window", o.window, "Level index window LO:HI")->capture_default_str();
  cmd->add_option("--lambda", o.lambda, "Upper energy ceiling for the window");
}

ModelParams to_params(const CommonOpts& o) {
  ModelParams p;
  p.omega = o.omega;
  p.omega0 = o.omega0;
  p.g1 = o.g1;
  p.g2 = o.g2;
  p.j = o.j;
  if (o.nmax == "auto") {
    p.n_max = ModelParams::kAutoCutoff;
  } else {
    try {
      p.n_max = std::stoi(o.nmax);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--nmax", "expected 'auto' or an integer, got '" + o.nmax + "'");
    }
  }
  p.validate();
  return p;
}

int to_parity(const std::string& text) { return (text == "-" || text == "-1") ? -1 : +1; }

LevelWindow to_window(const CommonOpts& o) {
  LevelWindow w;
  const auto [lo, hi] = parse_window_spec(o.window);
  w.lo = lo;
  w.hi = hi;
  w.lambda = o.lambda;
  return w;
}

ConvergeOptions to_converge(const CommonOpts& o) {
  ConvergeOptions opts;
  opts.tol = o.tol;
  opts.ceiling = o.ceiling;
  return opts;
}

void add_params_meta(CsvTable& table, const ModelParams& p, int resolved_n_max) {
  table.add_meta("omega", p.omega);
  table.add_meta("omega0", p.omega0);
  table.add_meta("g1", p.g1);
  table.add_meta("g2", p.g2);
  table.add_meta("j", p.j);
  table.add_meta("nmax_requested", p.auto_cutoff() ? std::string("auto") : std::to_string(p.n_max));
  table.add_meta("nmax_resolved", static_cast<long>(resolved_n_max));
}

void write_outputs(const std::string& out_dir, const std::string& name, const CsvTable& table) {
  const std::filesystem::path dir(out_dir);
  write_text_atomic(dir / (name + ".csv"), table.to_string());
  write_text_atomic(dir / (name + ".meta"), meta_sidecar(table.meta));
}

// --- spectrum ---------------------------------------------------------------

void run_spectrum(const CommonOpts& o) {
  const ModelParams params = to_params(o);
  const int parity = to_parity(o.parity);
  const LevelWindow window = to_window(o);
  const SpectralData spec = converge_cutoff(params, parity, window.hi, to_converge(o));

  CsvTable table;
  table.add_meta("command", std::string("spectrum"));
  add_params_meta(table, params, spec.params.n_max);
  table.add_meta("parity", static_cast<long>(parity));
  table.add_meta("levels", static_cast<long>(spec.converged_count));
  table.add_meta("tol", spec.tolerance);
  table.columns = {"index", "energy"};
  for (int i = 0; i < spec.converged_count; ++i) {
    table.rows.push_back({std::to_string(i), format_double(spec.eigenvalues[i])});
  }
  write_outputs(o.out, "spectrum", table);
}

// --- spacing ----------------------------------------------------------------

void run_spacing(const CommonOpts& o, const std::string& unfold, int unfold_width, int bins,
                 const std::string& bin_range) {
  const ModelParams params = to_params(o);
  const int parity = to_parity(o.parity);
  const LevelWindow window = to_window(o);
  const SpectralData spec = converge_cutoff(params, parity, window.hi, to_converge(o));

  const Unfolding mode = unfold == "local" ? Unfolding::LocalMean : Unfolding::GlobalMean;
  const SpacingSeries series = spacing_series(spec, window, mode, unfold_width);

  BinSpec bin_spec;
  bin_spec.count = bins;
  const auto colon = bin_range.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(bin_range);
    bin_spec.lo = std::stod(bin_range.substr(0, colon));
    bin_spec.hi = std::stod(bin_range.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--bin-range", "expected LO:HI, got '" + bin_range + "'");
  }
  const HistogramResult hist = histogram(series, bin_spec);

  CsvTable table;
  table.add_meta("command", std::string("spacing"));
  add_params_meta(table, params, spec.params.n_max);
  table.add_meta("parity", static_cast<long>(parity));
  table.add_meta("window", std::to_string(window.lo) + ":" + std::to_string(window.hi));
  if (window.lambda) table.add_meta("lambda", *window.lambda);
  table.add_meta("unfolding", unfold);
  table.add_meta("tol", spec.tolerance);
  table.add_meta("spacing_count", static_cast<long>(series.raw.size()));
  table.add_meta("mean_raw_spacing", series.mean_raw);
  table.add_meta("ks_poisson", ks_distance(series.normalized, ReferenceEnsemble::Poisson));
  table.add_meta("ks_wigner_dyson", ks_distance(series.normalized, ReferenceEnsemble::WignerDyson));
  table.columns = {"s_lo", "s_hi", "count", "density", "poisson", "wigner_dyson"};
  for (size_t b = 0; b + 1 < hist.edges.size(); ++b) {
    const double mid = 0.5 * (hist.edges[b] + hist.edges[b + 1]);
    table.rows.push_back({format_double(hist.edges[b]), format_double(hist.edges[b + 1]),
                          std::to_string(hist.counts[b]), format_double(hist.density[b]),
                          format_double(reference_pdf(ReferenceEnsemble::Poisson, mid)),
                          format_double(reference_pdf(ReferenceEnsemble::WignerDyson, mid))});
  }
  write_outputs(o.out, "spacing", table);
}

// --- rstat ------------------------------------------------------------------

void run_rstat(const CommonOpts& o) {
  const ModelParams params = to_params(o);
  const int parity = to_parity(o.parity);
  const LevelWindow window = to_window(o);
  const SpectralData spec = converge_cutoff(params, parity, window.hi, to_converge(o));
  const RStatResult r = r_statistic(spec, window);

  CsvTable table;
  table.add_meta("command", std::string("rstat"));
  add_params_meta(table, params, spec.params.n_max);
  table.add_meta("parity", static_cast<long>(parity));
  table.add_meta("window", std::to_string(window.lo) + ":" + std::to_string(window.hi));
  if (window.lambda) table.add_meta("lambda", *window.lambda);
  table.add_meta("tol", spec.tolerance);
  table.add_meta("r_mean", r.mean);
  table.add_meta("ratio_count", static_cast<long>(r.count));
  table.add_meta("zero_spacing_count", static_cast<long>(r.zero_spacing_count));
  table.columns = {"level_index", "r"};
  for (int i = 0; i < r.count; ++i) {
    table.rows.push_back(
        {std::to_string(window.lo + 1 + i), format_double(r.ratios[static_cast<size_t>(i)])});
  }
  write_outputs(o.out, "rstat", table);
}

// --- otoc -------------------------------------------------------------------

std::vector<double> parse_times(const std::string& text) {
  if (text.find(':') == std::string::npos) {
    return {std::stod(text)};
  }
  const RangeSpec range = parse_range_spec(text);
  std::vector<double> times;
  times.reserve(static_cast<size_t>(range.steps));
  for (int i = 0; i < range.steps; ++i) {
    times.push_back(range.steps == 1
                        ? range.min
                        : range.min + (range.max - range.min) * i / (range.steps - 1));
  }
  return times;
}

void run_otoc(const CommonOpts& o, double beta, const std::string& time_spec, double shift,
              double time_avg_delta) {
  const ModelParams params = to_params(o);
  const std::vector<double> times = parse_times(time_spec);

  OtocOptions opts;
  opts.tol = o.tol;
  opts.ceiling = o.ceiling;
  opts.time_avg_halfwidth = time_avg_delta;
  const OtocSeries series = otoc_series_at(params, beta, times, shift, opts);

  CsvTable table;
  table.add_meta("command", std::string("otoc"));
  add_params_meta(table, params, series.params.n_max);
  table.add_meta("parity", static_cast<long>(series.parity));
  table.add_meta("beta", beta);
  table.add_meta("shift", shift);
  table.add_meta("observable", series.observable);
  table.add_meta("f0", series.f0);
  table.add_meta("thermal_levels", static_cast<long>(series.thermal_levels));
  table.add_meta("max_imag_residual", series.max_imag_residual);
  table.columns = {"t", "F", "deficit"};
  for (size_t i = 0; i < series.times.size(); ++i) {
    table.rows.push_back({format_double(series.times[i]), format_double(series.f[i]),
                          format_double(series.deficit[i])});
  }
  write_outputs(o.out, "otoc", table);
}

// --- overlap ----------------------------------------------------------------

void run_overlap(const CommonOpts& o, double ref_g1, double ref_g2, double threshold,
                 double degeneracy_tol) {
  const ModelParams target = to_params(o);
  ModelParams reference = target;
  reference.g1 = ref_g1;
  reference.g2 = ref_g2;
  const int parity = to_parity(o.parity);
  const LevelWindow window = to_window(o);

  ConvergeOptions opts = to_converge(o);
  OverlapResult result = max_overlap_pair(reference, target, parity, window.hi, opts);
  if (degeneracy_tol >= 0.0) {
    // Re-run the grouping with the explicit tolerance on the same bases.
    const int common = result.reference_params.n_max;
    SpectralData ref = diagonalize(
        build_hamiltonian(enumerate_basis(reference.with_cutoff(common), parity)), true);
    SpectralData tgt =
        diagonalize(build_hamiltonian(enumerate_basis(target.with_cutoff(common), parity)), true);
    result = max_overlap(ref, tgt, degeneracy_tol);
    const size_t keep = std::min<size_t>(static_cast<size_t>(window.hi), result.max_overlap.size());
    result.max_overlap.resize(keep);
    result.eigenspace_index.resize(keep);
    result.target_energy.resize(keep);
    result.completeness.resize(keep);
  }

  CsvTable table;
  table.add_meta("command", std::string("overlap"));
  add_params_meta(table, target, result.target_params.n_max);
  table.add_meta("ref_g1", ref_g1);
  table.add_meta("ref_g2", ref_g2);
  table.add_meta("parity", static_cast<long>(parity));
  table.add_meta("states", static_cast<long>(result.max_overlap.size()));
  table.add_meta("tol", o.tol);
  table.add_meta("degeneracy_tol", result.degeneracy_tol);
  table.add_meta("eigenspace_count", static_cast<long>(result.eigenspace_count));
  table.add_meta("hose_taylor_threshold", threshold);
  table.add_meta("hose_taylor_fraction", hose_taylor_fraction(result, threshold));
  table.columns = {"state_index", "target_energy", "max_overlap", "eigenspace_index"};
  for (size_t i = 0; i < result.max_overlap.size(); ++i) {
    table.rows.push_back({std::to_string(i), format_double(result.target_energy[i]),
                          format_double(result.max_overlap[i]),
                          std::to_string(result.eigenspace_index[i])});
  }
  write_outputs(o.out, "overlap", table);
}

// --- sweep ------------------------------------------------------------------

void run_sweep_cmd(const CommonOpts& o, const std::string& grid, const std::string& diagnostics,
                   double beta, double time, double shift, double time_avg_delta, int threads,
                   std::string checkpoint, bool resume, double mask_radius) {
  SweepSpec spec;
  const auto comma = grid.find(',');
  const RangeSpec r1 = parse_range_spec(comma == std::string::npos ? grid : grid.substr(0, comma));
  const RangeSpec r2 =
      comma == std::string::npos ? r1 : parse_range_spec(grid.substr(comma + 1));
  spec.g1 = {r1.min, r1.max, r1.steps};
  spec.g2 = {r2.min, r2.max, r2.steps};
  const ModelParams base = to_params(o);
  spec.omega = base.omega;
  spec.omega0 = base.omega0;
  spec.j = base.j;
  spec.n_max = base.n_max;
  spec.window = to_window(o);
  spec.beta = beta;
  spec.time = time;
  spec.shift = shift;
  spec.time_avg_halfwidth = time_avg_delta;
  spec.conv_tol = o.tol;
  spec.ceiling = o.ceiling;
  spec.mask_radius = mask_radius;

  spec.do_rstat = diagnostics.find("rstat") != std::string::npos;
  spec.do_otoc = diagnostics.find("otoc") != std::string::npos;
  spec.do_order = diagnostics.find("order") != std::string::npos;
  if (!spec.do_rstat && !spec.do_otoc && !spec.do_order) {
    throw CLI::ValidationError("--diagnostics",
                               "expected a comma list drawn from rstat,otoc,order");
  }

  if (checkpoint.empty()) {
    checkpoint = (std::filesystem::path(o.out) / "sweep.checkpoint").string();
  }
  const int total = spec.g1.steps * spec.g2.steps;
  int done = 0;
  SweepResult result =
      run_sweep(spec, threads, checkpoint, resume, [&done, total](const SweepCell& cell) {
        ++done;
        std::fprintf(stderr, "sweep: %d/%d cells (g1=%g g2=%g%s)\n", done, total, cell.g1, cell.g2,
                     cell.status == CellStatus::Failed ? ", FAILED" : "");
      });

  write_text_atomic(std::filesystem::path(o.out) / "sweep.csv", sweep_csv(result));
  std::vector<std::pair<std::string, std::string>> meta = {
      {"command", "sweep"},
      {"config", spec.canonical_config()},
      {"checkpoint", checkpoint},
      {"failed_cells", std::to_string(result.failed_count())},
  };
  write_text_atomic(std::filesystem::path(o.out) / "sweep.meta", meta_sidecar(meta));
}

// Applies a "key = value" configuration file by injecting the pairs as
// flags ahead of the explicit command line.  Keys mirror the long option
// names; unknown keys are usage errors and explicitly passed flags win.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  if (args.empty() || args[0].empty() || args[0][0] == '-') return args;
  const std::string sub_name = args[0];
  const CLI::App* sub = nullptr;
  for (const CLI::App* candidate : app.get_subcommands(nullptr)) {
    if (candidate->get_name() == sub_name) sub = candidate;
  }
  if (sub == nullptr) return args;

  std::string config_path;
  for (size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    }
  }
  if (config_path.empty()) return args;

  std::ifstream in(config_path);
  if (!in) {
    throw CLI::ValidationError("--config", "cannot read configuration file " + config_path);
  }
  std::vector<std::string> injected;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError(
          "--config", config_path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    const std::string flag = "--" + key;
    if (key.empty() || key == "config" || sub->get_option_no_throw(flag) == nullptr) {
      throw CLI::ValidationError(
          "--config", config_path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    bool overridden = false;
    for (size_t i = 1; i < args.size(); ++i) {
      if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) overridden = true;
    }
    if (!overridden) injected.push_back(flag + "=" + value);
  }

  std::vector<std::string> out;
  out.reserve(args.size() + injected.size());
  out.push_back(sub_name);
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-diagonalization ergodicity diagnostics for the anisotropic Dicke model"};
  app.require_subcommand(1);

  CommonOpts spectrum_opts;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Converged low-lying sector spectrum");
  add_common_options(spectrum, spectrum_opts);
  add_sector_options(spectrum, spectrum_opts);
  spectrum->callback([&] { run_spectrum(spectrum_opts); });

  CommonOpts spacing_opts;
  std::string unfold = "global";
  int unfold_width = 25;
  int bins = 30;
  std::string bin_range = "0:4";
  CLI::App* spacing = app.add_subcommand("spacing", "Level-spacing histogram with references");
  add_common_options(spacing, spacing_opts);
  add_sector_options(spacing, spacing_opts);
  spacing->add_option("--unfold", unfold, "Spacing normalisation: global or local")
      ->check(CLI::IsMember({"global", "local"}))
      ->capture_default_str();
  spacing->add_option("--unfold-width", unfold_width, "Half-width of the local unfolding window")
      ->capture_default_str();
  spacing->add_option("--bins", bins, "Histogram bin count")->capture_default_str();
  spacing->add_option("--bin-range", bin_range, "Histogram range LO:HI")->capture_default_str();
  spacing->callback([&] { run_spacing(spacing_opts, unfold, unfold_width, bins, bin_range); });

  CommonOpts rstat_opts;
  CLI::App* rstat = app.add_subcommand("rstat", "Consecutive level-spacing ratio statistic");
  add_common_options(rstat, rstat_opts);
  add_sector_options(rstat, rstat_opts);
  rstat->callback([&] { run_rstat(rstat_opts); });

  CommonOpts otoc_opts;
  double beta = 0.1;
  std::string time_spec = "100";
  double shift = 100.0;
  double time_avg_delta = 0.0;
  CLI::App* otoc = app.add_subcommand("otoc", "Thermal out-of-time-order correlator");
  add_common_options(otoc, otoc_opts, /*default_j=*/5.0);
  otoc->add_option("--beta", beta, "Inverse temperature")->capture_default_str();
  otoc->add_option("--time", time_spec, "Evaluation time t or grid MIN:MAX:STEPS")
      ->capture_default_str();
  otoc->add_option("--shift", shift, "Observable shift: V = a†a + shift")->capture_default_str();
  otoc->add_option("--time-avg-delta", time_avg_delta,
                   "Average the deficit over [t-delta, t+delta] (0 = off)")
      ->capture_default_str();
  otoc->callback([&] { run_otoc(otoc_opts, beta, time_spec, shift, time_avg_delta); });

  CommonOpts overlap_opts;
  double ref_g1 = 0.0;
  double ref_g2 = 0.0;
  double threshold = 0.5;
  double degeneracy_tol = -1.0;
  CLI::App* overlap = app.add_subcommand("overlap", "Eigenstate overlap with a reference model");
  add_common_options(overlap, overlap_opts);
  add_sector_options(overlap, overlap_opts);
  overlap->add_option("--ref-g1", ref_g1, "Reference co-rotating coupling")
      ->capture_default_str();
  overlap->add_option("--ref-g2", ref_g2, "Reference counter-rotating coupling")
      ->capture_default_str();
  overlap->add_option("--threshold", threshold, "Overlap threshold for the retained fraction")
      ->capture_default_str();
  overlap->add_option("--degeneracy-tol", degeneracy_tol,
                      "Eigenspace grouping tolerance (negative = auto)")
      ->capture_default_str();
  overlap->callback(
      [&] { run_overlap(overlap_opts, ref_g1, ref_g2, threshold, degeneracy_tol); });

  CommonOpts sweep_opts;
  std::string grid = "0.02:1:21";
  std::string diagnostics = "rstat,otoc,order";
  double sweep_beta = 0.1;
  double sweep_time = 100.0;
  double sweep_shift = 100.0;
  double sweep_time_avg = 0.0;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  std::string checkpoint;
  bool resume = false;
  double mask_radius = 0.3;
  CLI::App* sweep = app.add_subcommand("sweep", "(g1, g2) phase-diagram sweep with checkpointing");
  add_common_options(sweep, sweep_opts);
  sweep->add_option("--window", sweep_opts.window, "r-statistic level window LO:HI")
      ->capture_default_str();
  sweep->add_option("--grid", grid, "g1 grid MIN:MAX:STEPS, optionally ,MIN:MAX:STEPS for g2")
      ->capture_default_str();
  sweep->add_option("--diagnostics", diagnostics, "Comma list from rstat,otoc,order")
      ->capture_default_str();
  sweep->add_option("--beta", sweep_beta, "Inverse temperature for the butterfly map")
      ->capture_default_str();
  sweep->add_option("--time", sweep_time, "Butterfly evaluation time")->capture_default_str();
  sweep->add_option("--shift", sweep_shift, "Observable shift")->capture_default_str();
  sweep->add_option("--time-avg-delta", sweep_time_avg, "Butterfly time averaging half-width")
      ->capture_default_str();
  sweep->add_option("--threads", threads, "Worker pool size")->capture_default_str();
  sweep->add_option("--checkpoint", checkpoint, "Checkpoint path (default OUT/sweep.checkpoint)");
  sweep->add_flag("--resume", resume, "Resume from the checkpoint");
  sweep->add_option("--mask-radius", mask_radius,
                    "Annotation radius of the small-coupling cluster artifact region")
      ->capture_default_str();
  sweep->callback([&] {
    run_sweep_cmd(sweep_opts, grid, diagnostics, sweep_beta, sweep_time, sweep_shift,
                  sweep_time_avg, threads, checkpoint, resume, mask_radius);
  });

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(app, std::move(args));
    std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed args
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const TailWeightError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ResumeMismatchError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
