#pragma once

#include <filesystem>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "admdiag/diagnostics.hpp"
#include "admdiag/model.hpp"

namespace admdiag {

/// Resuming against a checkpoint written for a different sweep configuration.
struct ResumeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridAxis {
  double min = 0.02;
  double max = 1.0;
  int steps = 21;

  double value_at(int i) const;
};

/// Full description of a (g1, g2) phase-diagram sweep.  One pseudospin length
/// per sweep; the ergodicity map and the butterfly map are separate runs.
struct SweepSpec {
  GridAxis g1;
  GridAxis g2;
  double omega = 1.0;
  double omega0 = 1.0;
  double j = 10.0;
  int n_max = ModelParams::kAutoCutoff;  ///< pinned Fock cutoff for every cell, or auto

  bool do_rstat = true;
  bool do_otoc = true;
  bool do_order = true;

  LevelWindow window;           ///< r-statistic window
  double beta = 0.1;            ///< butterfly inverse temperature
  double time = 100.0;          ///< butterfly evaluation time
  double shift = 100.0;         ///< V = a†a + shift
  double time_avg_halfwidth = 0.0;
  double conv_tol = 1e-8;
  int ceiling = 5000;
  double mask_radius = 0.3;     ///< plot annotation only; cells inside are still computed

  /// Single-line canonical form used to validate checkpoint/resume pairs.
  std::string canonical_config() const;
};

enum class CellStatus { Pending, Done, Failed };

struct SweepCell {
  int i1 = 0;
  int i2 = 0;
  double g1 = 0.0;
  double g2 = 0.0;
  CellStatus status = CellStatus::Pending;
  double r_mean = std::numeric_limits<double>::quiet_NaN();
  double otoc_deficit = std::numeric_limits<double>::quiet_NaN();
  double order_parameter = std::numeric_limits<double>::quiet_NaN();
  int n_max = 0;  ///< largest resolved cutoff among the cell's diagnostics
  std::string error;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepCell> cells;  ///< canonical g1-major order

  const SweepCell& cell(int i1, int i2) const;
  int failed_count() const;
};

/// Evaluates one grid cell; pure function of (spec, i1, i2).  Diagnostic
/// failures are captured in the cell status instead of propagating.
SweepCell evaluate_cell(const SweepSpec& spec, int i1, int i2);

/// Runs the sweep over a worker pool.  Results are bitwise independent of
/// the worker count and completion order: each cell is a pure
/// single-threaded computation and the output order is canonical.  A
/// checkpoint record is appended after every completed cell; resume replays
/// finished cells after validating the stored configuration.
SweepResult run_sweep(const SweepSpec& spec, int threads,
                      const std::filesystem::path& checkpoint_path, bool resume,
                      const std::function<void(const SweepCell&)>& progress = {});

/// Canonical CSV serialisation (used by the CLI and tests verbatim).
std::string sweep_csv(const SweepResult& result);

}  // namespace admdiag
