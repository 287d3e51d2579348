#pragma once

#include <optional>
#include <vector>

#include "admdiag/spectra.hpp"

namespace admdiag {

/// Index window [lo, hi) into the ascending level list used by the spacing
/// analysis; the lowest levels are dropped to sidestep the non-uniform
/// density of states at the spectrum edge.  An optional energy ceiling
/// additionally truncates the window to levels with E <= lambda.
struct LevelWindow {
  int lo = 200;
  int hi = 1000;
  std::optional<double> lambda;
};

enum class Unfolding {
  GlobalMean,  ///< divide by the window mean spacing
  LocalMean,   ///< divide by a moving-window mean (2w+1 spacings)
};

struct SpacingSeries {
  std::vector<double> raw;         ///< s_n = E_{n+1} - E_n over the window
  std::vector<double> normalized;  ///< raw / mean (or locally unfolded)
  double mean_raw = 0.0;
  int first_level = 0;  ///< level index of the first spacing's lower edge
};

/// Consecutive spacings of the levels with index in [window.lo, window.hi),
/// refused when the window reaches past the certified converged levels.
SpacingSeries spacing_series(const SpectralData& spec, const LevelWindow& window,
                             Unfolding unfolding = Unfolding::GlobalMean,
                             int local_halfwidth = 25);

enum class ReferenceEnsemble { Poisson, WignerDyson };

/// exp(-s) for the Poissonian and (pi/2) s exp(-pi s^2/4) for the
/// Wigner-Dyson surmise; s must be >= 0.
double reference_pdf(ReferenceEnsemble kind, double s);
double reference_cdf(ReferenceEnsemble kind, double s);

struct BinSpec {
  double lo = 0.0;
  double hi = 4.0;
  int count = 30;
};

struct HistogramResult {
  std::vector<double> edges;    ///< count+1 uniform edges
  std::vector<long> counts;     ///< bins are [e_i, e_{i+1}), last bin closed
  std::vector<double> density;  ///< counts normalised to unit area over the range
  long total_in_range = 0;
};

HistogramResult histogram(const std::vector<double>& samples, const BinSpec& bins = {});
HistogramResult histogram(const SpacingSeries& series, const BinSpec& bins = {});

/// Kolmogorov-Smirnov distance between the empirical CDF of the normalized
/// spacings and a reference ensemble CDF.
double ks_distance(const std::vector<double>& samples, ReferenceEnsemble kind);

struct RStatResult {
  std::vector<double> ratios;  ///< r_n = min(s_n/s_{n-1}, s_{n-1}/s_n), each in [0,1]
  double mean = 0.0;
  int count = 0;
  int zero_spacing_count = 0;  ///< ratios involving an exact zero spacing (defined as 0)
};

/// Ratio statistic over consecutive spacings inside the window; independent
/// of the local density of states, so no unfolding is applied.
RStatResult r_statistic(const SpectralData& spec, const LevelWindow& window);

/// Core of r_statistic on a raw spacing sequence (also used by the reference
/// ensemble estimates).
RStatResult r_statistic_of_spacings(const std::vector<double>& raw);

/// First-order cluster energies around g1 = g2 = 0 at resonance
/// (omega = omega0): the states |n, m> and |n±1, m∓1> cluster at
/// omega(n+m) and omega(n+m) ± g1 sqrt(j + j² + m - m² + 2(j + j² - m²) n)/sqrt(2j).
struct ClusterEnergies {
  double lower = 0.0;
  double center = 0.0;
  double upper = 0.0;
  double splitting() const { return upper - center; }
};

ClusterEnergies perturbative_cluster_energies(const ModelParams& params, int n, int twice_m);

}  // namespace admdiag
