#include "admdiag/sweep.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "admdiag/io.hpp"
#include "admdiag/otoc.hpp"
#include "admdiag/spectra.hpp"

namespace admdiag {

double GridAxis::value_at(int i) const {
  if (i < 0 || i >= steps) throw std::out_of_range("grid index out of range");
  if (steps == 1) return min;
  return min + (max - min) * i / (steps - 1);
}

std::string SweepSpec::canonical_config() const {
  std::ostringstream os;
  auto d = [](double v) { return format_double(v); };
  os << "sweep-v1"
     << ";g1=" << d(g1.min) << ":" << d(g1.max) << ":" << g1.steps
     << ";g2=" << d(g2.min) << ":" << d(g2.max) << ":" << g2.steps
     << ";omega=" << d(omega) << ";omega0=" << d(omega0) << ";j=" << d(j)
     << ";nmax=" << n_max
     << ";diag=" << (do_rstat ? "r" : "") << (do_otoc ? "o" : "") << (do_order ? "p" : "")
     << ";window=" << window.lo << ":" << window.hi
     << ";lambda=" << (window.lambda ? d(*window.lambda) : "none")
     << ";beta=" << d(beta) << ";t=" << d(time) << ";shift=" << d(shift)
     << ";tavg=" << d(time_avg_halfwidth) << ";tol=" << d(conv_tol) << ";ceiling=" << ceiling;
  return os.str();
}

const SweepCell& SweepResult::cell(int i1, int i2) const {
  return cells.at(static_cast<size_t>(i1) * spec.g2.steps + i2);
}

int SweepResult::failed_count() const {
  int failed = 0;
  for (const auto& c : cells) {
    if (c.status == CellStatus::Failed) ++failed;
  }
  return failed;
}

SweepCell evaluate_cell(const SweepSpec& spec, int i1, int i2) {
  SweepCell cell;
  cell.i1 = i1;
  cell.i2 = i2;
  cell.g1 = spec.g1.value_at(i1);
  cell.g2 = spec.g2.value_at(i2);

  ModelParams params;
  params.omega = spec.omega;
  params.omega0 = spec.omega0;
  params.g1 = cell.g1;
  params.g2 = cell.g2;
  params.j = spec.j;
  params.n_max = spec.n_max;

  try {
    if (spec.do_rstat) {
      ConvergeOptions opts;
      opts.tol = spec.conv_tol;
      opts.ceiling = spec.ceiling;
      const SpectralData spectrum = converge_cutoff(params, +1, spec.window.hi, opts);
      cell.r_mean = r_statistic(spectrum, spec.window).mean;
      cell.n_max = std::max(cell.n_max, spectrum.params.n_max);
    }
    if (spec.do_otoc) {
      OtocOptions opts;
      opts.tol = spec.conv_tol;
      opts.ceiling = spec.ceiling;
      opts.time_avg_halfwidth = spec.time_avg_halfwidth;
      const DeficitResult deficit = otoc_deficit_at(params, spec.beta, spec.time, spec.shift, opts);
      cell.otoc_deficit = deficit.deficit;
      cell.n_max = std::max(cell.n_max, deficit.n_max);
    }
    if (spec.do_order) {
      ConvergeOptions opts;
      opts.tol = spec.conv_tol;
      opts.ceiling = spec.ceiling;
      cell.order_parameter = order_parameter(params, opts);
    }
    cell.status = CellStatus::Done;
  } catch (const std::exception& e) {
    cell.status = CellStatus::Failed;
    cell.error = e.what();
  }
  return cell;
}

namespace {

using nlohmann::json;

json cell_record(const SweepCell& cell) {
  json rec;
  rec["type"] = "cell";
  rec["i1"] = cell.i1;
  rec["i2"] = cell.i2;
  rec["status"] = cell.status == CellStatus::Done ? "done" : "failed";
  rec["r_mean"] = cell.r_mean;
  rec["otoc_deficit"] = cell.otoc_deficit;
  rec["order_parameter"] = cell.order_parameter;
  rec["n_max"] = cell.n_max;
  if (!cell.error.empty()) rec["error"] = cell.error;
  return rec;
}

double json_double(const json& rec, const char* key) {
  if (!rec.contains(key) || rec[key].is_null()) return std::numeric_limits<double>::quiet_NaN();
  return rec[key].get<double>();
}

// Loads finished cells from an existing checkpoint.  A torn trailing line
// (interrupted append) is dropped; anything else malformed refuses the
// resume.
std::vector<SweepCell> load_checkpoint(const std::filesystem::path& path, const SweepSpec& spec) {
  std::ifstream in(path);
  if (!in) throw ResumeMismatchError("cannot read checkpoint " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw ResumeMismatchError("checkpoint " + path.string() + " has no header");

  std::vector<SweepCell> cells;
  for (size_t i = 0; i < lines.size(); ++i) {
    json rec;
    try {
      rec = json::parse(lines[i]);
    } catch (const json::parse_error&) {
      if (i + 1 == lines.size()) break;  // torn final record from an interrupted run
      throw ResumeMismatchError("checkpoint " + path.string() + " is corrupt at line " +
                                std::to_string(i + 1));
    }
    if (i == 0) {
      if (rec.value("type", "") != "header" || !rec.contains("config")) {
        throw ResumeMismatchError("checkpoint " + path.string() + " has no valid header");
      }
      if (rec["config"].get<std::string>() != spec.canonical_config()) {
        throw ResumeMismatchError(
            "checkpoint " + path.string() +
            " was written for a different sweep configuration; refusing to resume");
      }
      continue;
    }
    if (rec.value("type", "") != "cell") continue;
    SweepCell cell;
    cell.i1 = rec.at("i1").get<int>();
    cell.i2 = rec.at("i2").get<int>();
    cell.status = rec.value("status", "") == "done" ? CellStatus::Done : CellStatus::Failed;
    cell.r_mean = json_double(rec, "r_mean");
    cell.otoc_deficit = json_double(rec, "otoc_deficit");
    cell.order_parameter = json_double(rec, "order_parameter");
    cell.n_max = rec.value("n_max", 0);
    cell.error = rec.value("error", "");
    if (cell.i1 < 0 || cell.i1 >= spec.g1.steps || cell.i2 < 0 || cell.i2 >= spec.g2.steps) {
      throw ResumeMismatchError("checkpoint cell index outside the sweep grid");
    }
    cell.g1 = spec.g1.value_at(cell.i1);
    cell.g2 = spec.g2.value_at(cell.i2);
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int threads,
                      const std::filesystem::path& checkpoint_path, bool resume,
                      const std::function<void(const SweepCell&)>& progress) {
  if (spec.g1.steps < 1 || spec.g2.steps < 1) throw std::invalid_argument("empty sweep grid");

  SweepResult result;
  result.spec = spec;
  const int total = spec.g1.steps * spec.g2.steps;
  result.cells.resize(static_cast<size_t>(total));
  for (int i1 = 0; i1 < spec.g1.steps; ++i1) {
    for (int i2 = 0; i2 < spec.g2.steps; ++i2) {
      SweepCell& cell = result.cells[static_cast<size_t>(i1) * spec.g2.steps + i2];
      cell.i1 = i1;
      cell.i2 = i2;
      cell.g1 = spec.g1.value_at(i1);
      cell.g2 = spec.g2.value_at(i2);
    }
  }

  if (resume && std::filesystem::exists(checkpoint_path)) {
    // Done cells are replayed verbatim; failed cells are recomputed.
    for (SweepCell& stored : load_checkpoint(checkpoint_path, spec)) {
      if (stored.status == CellStatus::Done) {
        result.cells[static_cast<size_t>(stored.i1) * spec.g2.steps + stored.i2] =
            std::move(stored);
      }
    }
  }

  if (checkpoint_path.has_parent_path()) {
    std::filesystem::create_directories(checkpoint_path.parent_path());
  }
  std::ofstream checkpoint;
  if (resume && std::filesystem::exists(checkpoint_path)) {
    checkpoint.open(checkpoint_path, std::ios::app);
  } else {
    checkpoint.open(checkpoint_path, std::ios::trunc);
    json header;
    header["type"] = "header";
    header["config"] = spec.canonical_config();
    checkpoint << header.dump() << "\n" << std::flush;
  }
  if (!checkpoint) throw std::runtime_error("cannot open checkpoint " + checkpoint_path.string());

  std::vector<int> pending;
  for (int i = 0; i < total; ++i) {
    if (result.cells[static_cast<size_t>(i)].status != CellStatus::Done) pending.push_back(i);
  }

  std::atomic<size_t> next{0};
  std::mutex io_mutex;
  auto worker = [&] {
    while (true) {
      const size_t slot = next.fetch_add(1);
      if (slot >= pending.size()) return;
      const int index = pending[slot];
      const SweepCell& placed = result.cells[static_cast<size_t>(index)];
      SweepCell cell = evaluate_cell(spec, placed.i1, placed.i2);
      {
        std::lock_guard<std::mutex> lock(io_mutex);
        result.cells[static_cast<size_t>(index)] = cell;
        checkpoint << cell_record(cell).dump() << "\n" << std::flush;
        if (progress) progress(cell);
      }
    }
  };

  const int pool = std::max(1, threads);
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(pool));
  for (int i = 0; i < pool; ++i) workers.emplace_back(worker);
  for (auto& w : workers) w.join();
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  CsvTable table;
  auto range = [](const GridAxis& axis) {
    return format_double(axis.min) + ":" + format_double(axis.max) + ":" +
           std::to_string(axis.steps);
  };
  table.add_meta("command", std::string("sweep"));
  table.add_meta("g1_grid", range(spec.g1));
  table.add_meta("g2_grid", range(spec.g2));
  table.add_meta("omega", spec.omega);
  table.add_meta("omega0", spec.omega0);
  table.add_meta("j", spec.j);
  std::string diag;
  if (spec.do_rstat) diag += "rstat,";
  if (spec.do_otoc) diag += "otoc,";
  if (spec.do_order) diag += "order,";
  if (!diag.empty()) diag.pop_back();
  table.add_meta("diagnostics", diag);
  table.add_meta("window", std::to_string(spec.window.lo) + ":" + std::to_string(spec.window.hi));
  table.add_meta("beta", spec.beta);
  table.add_meta("time", spec.time);
  table.add_meta("shift", spec.shift);
  table.add_meta("time_avg_halfwidth", spec.time_avg_halfwidth);
  table.add_meta("conv_tol", spec.conv_tol);
  table.add_meta("ceiling", static_cast<long>(spec.ceiling));
  table.add_meta("mask_radius", spec.mask_radius);
  // Reference lines for plots; not burned into the data.
  table.add_meta("qpt_line", "g1 + g2 = " + format_double(std::sqrt(spec.omega * spec.omega0)));
  table.add_meta("dicke_line", std::string("g1 = g2"));
  table.add_meta("failed_cells", static_cast<long>(result.failed_count()));

  table.columns = {"g1",   "g2",   "j",     "omega",  "omega0",       "beta",
                   "t",    "n_max", "r_mean", "otoc_deficit", "order_parameter"};
  table.rows.reserve(result.cells.size());
  for (const SweepCell& cell : result.cells) {
    table.rows.push_back({format_double(cell.g1), format_double(cell.g2), format_double(spec.j),
                          format_double(spec.omega), format_double(spec.omega0),
                          format_double(spec.beta), format_double(spec.time),
                          std::to_string(cell.n_max), format_double(cell.r_mean),
                          format_double(cell.otoc_deficit),
                          format_double(cell.order_parameter)});
  }
  return table.to_string();
}

}  // namespace admdiag
