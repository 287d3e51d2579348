#include "admdiag/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace admdiag {

namespace {

// Window levels [lo, hi') with hi' shrunk by the optional energy ceiling.
std::pair<int, int> resolve_window(const SpectralData& spec, const LevelWindow& window) {
  const int available = std::min<int>(spec.converged_count, spec.dimension());
  if (window.lo < 0 || window.lo >= window.hi) {
    throw std::invalid_argument("level window requires 0 <= lo < hi");
  }
  if (window.hi > available) {
    std::ostringstream os;
    os << "level window [" << window.lo << ", " << window.hi << ") exceeds the " << available
       << " converged levels; refusing unconverged data";
    throw std::invalid_argument(os.str());
  }
  int hi = window.hi;
  if (window.lambda) {
    while (hi > window.lo && spec.eigenvalues[hi - 1] > *window.lambda) --hi;
  }
  return {window.lo, hi};
}

}  // namespace

SpacingSeries spacing_series(const SpectralData& spec, const LevelWindow& window,
                             Unfolding unfolding, int local_halfwidth) {
  const auto [lo, hi] = resolve_window(spec, window);
  if (hi - lo < 2) throw std::invalid_argument("level window holds fewer than two levels");

  SpacingSeries out;
  out.first_level = lo;
  out.raw.reserve(static_cast<size_t>(hi - lo - 1));
  for (int i = lo; i + 1 < hi; ++i) {
    out.raw.push_back(spec.eigenvalues[i + 1] - spec.eigenvalues[i]);
  }
  out.mean_raw = std::accumulate(out.raw.begin(), out.raw.end(), 0.0) /
                 static_cast<double>(out.raw.size());
  if (!(out.mean_raw > 0.0)) {
    throw std::invalid_argument("window mean spacing is zero; cannot normalise");
  }

  out.normalized.resize(out.raw.size());
  if (unfolding == Unfolding::GlobalMean) {
    for (size_t i = 0; i < out.raw.size(); ++i) out.normalized[i] = out.raw[i] / out.mean_raw;
  } else {
    if (local_halfwidth < 1) throw std::invalid_argument("local unfolding requires halfwidth >= 1");
    const int count = static_cast<int>(out.raw.size());
    std::vector<double> prefix(static_cast<size_t>(count) + 1, 0.0);
    for (int i = 0; i < count; ++i) prefix[i + 1] = prefix[i] + out.raw[static_cast<size_t>(i)];
    for (int i = 0; i < count; ++i) {
      const int a = std::max(0, i - local_halfwidth);
      const int b = std::min(count - 1, i + local_halfwidth);
      const double local_mean = (prefix[b + 1] - prefix[a]) / static_cast<double>(b - a + 1);
      out.normalized[static_cast<size_t>(i)] =
          local_mean > 0.0 ? out.raw[static_cast<size_t>(i)] / local_mean : 0.0;
    }
  }
  return out;
}

double reference_pdf(ReferenceEnsemble kind, double s) {
  if (s < 0.0) throw std::invalid_argument("spacing must be non-negative");
  switch (kind) {
    case ReferenceEnsemble::Poisson:
      return std::exp(-s);
    case ReferenceEnsemble::WignerDyson:
      return 0.5 * std::numbers::pi * s * std::exp(-0.25 * std::numbers::pi * s * s);
  }
  throw std::invalid_argument("unknown reference ensemble");
}

double reference_cdf(ReferenceEnsemble kind, double s) {
  if (s < 0.0) throw std::invalid_argument("spacing must be non-negative");
  switch (kind) {
    case ReferenceEnsemble::Poisson:
      return 1.0 - std::exp(-s);
    case ReferenceEnsemble::WignerDyson:
      return 1.0 - std::exp(-0.25 * std::numbers::pi * s * s);
  }
  throw std::invalid_argument("unknown reference ensemble");
}

HistogramResult histogram(const std::vector<double>& samples, const BinSpec& bins) {
  if (samples.empty()) throw std::invalid_argument("histogram of an empty series");
  if (bins.count < 1 || !(bins.hi > bins.lo)) {
    throw std::invalid_argument("histogram needs at least one bin and hi > lo");
  }

  HistogramResult out;
  const double width = (bins.hi - bins.lo) / bins.count;
  out.edges.resize(static_cast<size_t>(bins.count) + 1);
  for (int i = 0; i <= bins.count; ++i) out.edges[static_cast<size_t>(i)] = bins.lo + i * width;
  out.counts.assign(static_cast<size_t>(bins.count), 0);

  for (double s : samples) {
    if (s < bins.lo || s > bins.hi) continue;
    int idx = static_cast<int>((s - bins.lo) / width);
    if (idx == bins.count) idx = bins.count - 1;  // final bin closed
    ++out.counts[static_cast<size_t>(idx)];
    ++out.total_in_range;
  }
  out.density.resize(static_cast<size_t>(bins.count), 0.0);
  if (out.total_in_range > 0) {
    const double norm = 1.0 / (static_cast<double>(out.total_in_range) * width);
    for (int i = 0; i < bins.count; ++i) {
      out.density[static_cast<size_t>(i)] = out.counts[static_cast<size_t>(i)] * norm;
    }
  }
  return out;
}

HistogramResult histogram(const SpacingSeries& series, const BinSpec& bins) {
  return histogram(series.normalized, bins);
}

double ks_distance(const std::vector<double>& samples, ReferenceEnsemble kind) {
  if (samples.empty()) throw std::invalid_argument("KS distance of an empty series");
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double ks = 0.0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    const double ref = reference_cdf(kind, std::max(0.0, sorted[i]));
    ks = std::max(ks, std::abs(ref - static_cast<double>(i) / n));
    ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - ref));
  }
  return ks;
}

RStatResult r_statistic_of_spacings(const std::vector<double>& raw) {
  if (raw.size() < 2) throw std::invalid_argument("r statistic needs at least two spacings");
  RStatResult out;
  out.ratios.reserve(raw.size() - 1);
  for (size_t i = 1; i < raw.size(); ++i) {
    const double a = raw[i - 1];
    const double b = raw[i];
    double r;
    if (a == 0.0 || b == 0.0) {
      // min-ratio convention: a degenerate pair contributes 0 and is counted.
      r = 0.0;
      ++out.zero_spacing_count;
    } else {
      r = std::min(a / b, b / a);
    }
    out.ratios.push_back(r);
  }
  out.count = static_cast<int>(out.ratios.size());
  out.mean = std::accumulate(out.ratios.begin(), out.ratios.end(), 0.0) / out.count;
  return out;
}

RStatResult r_statistic(const SpectralData& spec, const LevelWindow& window) {
  SpacingSeries series = spacing_series(spec, window);
  return r_statistic_of_spacings(series.raw);
}

ClusterEnergies perturbative_cluster_energies(const ModelParams& params, int n, int twice_m) {
  params.validate();
  if (params.omega != params.omega0) {
    throw std::invalid_argument("cluster energies are stated at resonance (omega == omega0) only");
  }
  const int two_j = params.two_j();
  if (n < 0 || twice_m < -two_j || twice_m > two_j || (twice_m + two_j) % 2 != 0) {
    throw std::invalid_argument("cluster centre (n, m) outside the basis");
  }
  const double j = params.j;
  const double m = 0.5 * twice_m;
  const double radicand = j + j * j + m - m * m + 2.0 * (j + j * j - m * m) * n;
  const double split =
      params.g1 * std::sqrt(radicand) / std::sqrt(static_cast<double>(two_j));
  const double center = params.omega * (n + m);
  return ClusterEnergies{center - split, center, center + split};
}

}  // namespace admdiag
