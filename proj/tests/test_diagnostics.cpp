#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "admdiag/diagnostics.hpp"
#include "admdiag/rmt.hpp"
#include "admdiag/spectra.hpp"

using namespace admdiag;

namespace {

ModelParams params(double omega, double omega0, double g1, double g2, double j, int n_max) {
  ModelParams p;
  p.omega = omega;
  p.omega0 = omega0;
  p.g1 = g1;
  p.g2 = g2;
  p.j = j;
  p.n_max = n_max;
  return p;
}

SpectralData synthetic_spectrum(std::vector<double> levels) {
  SpectralData spec;
  spec.params = params(1, 1, 0, 0, 0.5, 100);
  spec.parity = +1;
  spec.eigenvalues = Eigen::Map<Eigen::VectorXd>(levels.data(), static_cast<long>(levels.size()));
  spec.converged_count = static_cast<int>(levels.size());
  spec.tolerance = 1e-12;
  return spec;
}

LevelWindow window(int lo, int hi) {
  LevelWindow w;
  w.lo = lo;
  w.hi = hi;
  return w;
}

}  // namespace

TEST_CASE("spacing series of a harmonic ladder") {
  const SpectralData spec = synthetic_spectrum({0, 1, 2, 3});
  const SpacingSeries s = spacing_series(spec, window(0, 4));
  CHECK(s.raw == std::vector<double>{1, 1, 1});
  CHECK(s.normalized == std::vector<double>{1, 1, 1});
}

TEST_CASE("spacing series normalises by the window mean") {
  const SpectralData spec = synthetic_spectrum({0, 1, 3});
  const SpacingSeries s = spacing_series(spec, window(0, 3));
  REQUIRE(s.raw.size() == 2);
  CHECK(s.raw[0] == 1.0);
  CHECK(s.raw[1] == 2.0);
  CHECK(s.normalized[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(s.normalized[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("a degenerate pair yields an exact zero spacing") {
  const SpectralData spec = synthetic_spectrum({0, 0.5, 0.5, 2});
  const SpacingSeries s = spacing_series(spec, window(0, 4));
  CHECK(std::count(s.raw.begin(), s.raw.end(), 0.0) == 1);
}

TEST_CASE("normalized spacings average to one") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> levels(500);
  for (double& e : levels) e = u(rng);
  std::sort(levels.begin(), levels.end());
  const SpacingSeries s = spacing_series(synthetic_spectrum(levels), window(0, 500));
  double mean = 0.0;
  for (double x : s.normalized) mean += x;
  mean /= static_cast<double>(s.normalized.size());
  CHECK(std::abs(mean - 1.0) <= 1e-12);
}

TEST_CASE("window validation refuses unconverged or empty ranges") {
  SpectralData spec = synthetic_spectrum({0, 1, 2, 3, 4, 5});
  spec.converged_count = 4;
  CHECK_THROWS_AS(spacing_series(spec, window(0, 5)), std::invalid_argument);
  CHECK_THROWS_AS(spacing_series(spec, window(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(spacing_series(spec, window(-1, 3)), std::invalid_argument);
  CHECK_NOTHROW(spacing_series(spec, window(0, 4)));
}

TEST_CASE("energy ceiling truncates the window") {
  const SpectralData spec = synthetic_spectrum({0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  LevelWindow w = window(0, 10);
  w.lambda = 4.5;
  const SpacingSeries s = spacing_series(spec, w);
  CHECK(s.raw.size() == 4);  // levels 0..4 survive
}

TEST_CASE("local unfolding flattens a varying density") {
  // Quadratic level staircase: global normalisation leaves a trend, the
  // moving-window unfolding removes it.
  std::vector<double> levels(400);
  for (size_t i = 0; i < levels.size(); ++i) {
    const double x = static_cast<double>(i);
    levels[i] = x * x / 400.0;
  }
  const SpectralData spec = synthetic_spectrum(levels);
  const SpacingSeries local = spacing_series(spec, window(1, 400), Unfolding::LocalMean, 25);
  const SpacingSeries global = spacing_series(spec, window(1, 400));
  // The moving window is clamped at the series ends, so judge the bulk.
  auto bulk_spread = [](const std::vector<double>& v) {
    const auto lo = std::minmax_element(v.begin() + 25, v.end() - 25);
    return *lo.second - *lo.first;
  };
  CHECK(bulk_spread(local.normalized) < 0.05 * bulk_spread(global.normalized));
}

TEST_CASE("reference distributions") {
  CHECK(reference_pdf(ReferenceEnsemble::Poisson, 0.0) == 1.0);
  CHECK(reference_pdf(ReferenceEnsemble::WignerDyson, 0.0) == 0.0);
  const double expected = 0.5 * std::numbers::pi * std::exp(-0.25 * std::numbers::pi);
  CHECK(reference_pdf(ReferenceEnsemble::WignerDyson, 1.0) ==
        doctest::Approx(expected).epsilon(1e-15));
  CHECK_THROWS_AS(reference_pdf(ReferenceEnsemble::Poisson, -0.1), std::invalid_argument);
  CHECK(reference_cdf(ReferenceEnsemble::Poisson, 1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("histogram of constant spacings") {
  BinSpec bins;
  bins.lo = 0;
  bins.hi = 2;
  bins.count = 2;
  const HistogramResult h = histogram(std::vector<double>{1.0, 1.0, 1.0}, bins);
  CHECK(h.counts == std::vector<long>{0, 3});
  CHECK(h.density[0] == 0.0);
  CHECK(h.density[1] == 1.0);

  // Bin assignment: left-closed bins, final bin closed on the right.
  const HistogramResult edge = histogram(std::vector<double>{0.0, 1.0, 2.0}, bins);
  CHECK(edge.counts == std::vector<long>{1, 2});
}

TEST_CASE("histogram density matches the exponential law on Monte-Carlo samples") {
  std::mt19937_64 rng(42);
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> samples(100000);
  for (double& s : samples) s = exp1(rng);
  // The range reaches far enough that the unit-area renormalisation over the
  // binned range does not bias the comparison against the untruncated law.
  BinSpec bins;
  bins.lo = 0.0;
  bins.hi = 8.0;
  bins.count = 40;
  const HistogramResult h = histogram(samples, bins);

  double area = 0.0;
  double worst = 0.0;
  for (size_t b = 0; b + 1 < h.edges.size(); ++b) {
    const double width = h.edges[b + 1] - h.edges[b];
    const double center = 0.5 * (h.edges[b] + h.edges[b + 1]);
    area += h.density[b] * width;
    worst = std::max(worst, std::abs(h.density[b] - std::exp(-center)));
  }
  CHECK(std::abs(area - 1.0) <= 1e-12);
  CHECK(worst < 0.02);
}

TEST_CASE("KS distance identifies the generating ensemble") {
  std::mt19937_64 rng(11);
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> poisson(20000);
  for (double& s : poisson) s = exp1(rng);
  CHECK(ks_distance(poisson, ReferenceEnsemble::Poisson) < 0.01);
  CHECK(ks_distance(poisson, ReferenceEnsemble::Poisson) <
        ks_distance(poisson, ReferenceEnsemble::WignerDyson));

  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> wigner(20000);
  for (double& s : wigner) {
    s = std::sqrt(-4.0 * std::log1p(-u(rng)) / std::numbers::pi);  // inverse CDF
  }
  CHECK(ks_distance(wigner, ReferenceEnsemble::WignerDyson) < 0.01);
  CHECK(ks_distance(wigner, ReferenceEnsemble::WignerDyson) <
        ks_distance(wigner, ReferenceEnsemble::Poisson));
}

TEST_CASE("r statistic basics") {
  const RStatResult equal = r_statistic(synthetic_spectrum({0, 1, 2, 3, 4}), window(0, 5));
  for (double r : equal.ratios) CHECK(r == 1.0);
  CHECK(equal.mean == 1.0);

  const RStatResult half = r_statistic(synthetic_spectrum({0, 1, 3}), window(0, 3));
  REQUIRE(half.count == 1);
  CHECK(half.ratios[0] == 0.5);

  CHECK_THROWS_AS(r_statistic(synthetic_spectrum({0, 1}), window(0, 2)), std::invalid_argument);
}

TEST_CASE("zero spacings contribute zero ratios and are counted") {
  const RStatResult r = r_statistic(synthetic_spectrum({0, 0, 1, 2}), window(0, 4));
  REQUIRE(r.count == 2);
  CHECK(r.ratios[0] == 0.0);
  CHECK(r.ratios[1] == 1.0);
  CHECK(r.zero_spacing_count == 1);
  CHECK(r.mean == 0.5);
}

TEST_CASE("r statistic is invariant under affine rescaling") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> levels(300);
  for (double& e : levels) e = u(rng);
  std::sort(levels.begin(), levels.end());

  std::vector<double> scaled(levels.size());
  for (size_t i = 0; i < levels.size(); ++i) scaled[i] = 17.25 * levels[i] - 3.5;

  const RStatResult a = r_statistic(synthetic_spectrum(levels), window(0, 300));
  const RStatResult b = r_statistic(synthetic_spectrum(scaled), window(0, 300));
  // Rescaled spacings suffer cancellation against the shift, so the exact
  // identity holds to ~1e3 ulp here.
  for (int i = 0; i < a.count; ++i) {
    CHECK(a.ratios[static_cast<size_t>(i)] ==
          doctest::Approx(b.ratios[static_cast<size_t>(i)]).epsilon(1e-12));
  }
  CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-13));
}

TEST_CASE("poisson reference ratio reproduces 2 ln 2 - 1") {
  const double mean = poisson_reference_mean_r(1000000, 987654);
  CHECK(std::abs(mean - (2.0 * std::log(2.0) - 1.0)) < 0.002);
}

TEST_CASE("GOE bulk ratio is near the orthogonal-ensemble value") {
  // Small-sample sanity check; the acceptance suite runs the full-size one.
  const double mean = goe_reference_mean_r(300, 40, 24680);
  CHECK(std::abs(mean - 0.5307) < 0.01);
}

TEST_CASE("ratio statistic grows along the equal-coupling line at j=10") {
  // Slowest case in this suite: two converged 1000-level spectra.
  auto r_at = [](double g) {
    const SpectralData spec =
        converge_cutoff(params(1, 1, g, g, 10, ModelParams::kAutoCutoff), +1, 1000);
    return r_statistic(spec, window(200, 1000)).mean;
  };
  CHECK(r_at(0.1) < r_at(0.5));
}

TEST_CASE("cluster energies at the j=1/2 doublet and the spin-ladder bottom") {
  const ClusterEnergies doublet =
      perturbative_cluster_energies(params(1, 1, 0.05, 0.05, 0.5, 100), 0, +1);
  CHECK(doublet.center == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(doublet.upper == doctest::Approx(0.55).epsilon(1e-14));
  CHECK(doublet.lower == doctest::Approx(0.45).epsilon(1e-14));

  const ClusterEnergies bottom =
      perturbative_cluster_energies(params(1, 1, 0.05, 0.05, 10, 100), 0, -20);
  CHECK(bottom.center == -10.0);
  CHECK(bottom.splitting() == 0.0);

  CHECK_THROWS_AS(perturbative_cluster_energies(params(1, 0.9, 0.05, 0.05, 10, 100), 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(perturbative_cluster_energies(params(1, 1, 0.05, 0.05, 10, 100), 0, 21),
                  std::invalid_argument);
}

TEST_CASE("cluster formula error shrinks quadratically on the lowest levels") {
  // The lowest four positive-sector levels at j=10 sit in the one- and
  // three-state excitation manifolds, where the triple-cluster treatment is
  // complete, so its residual against exact diagonalization is O(g^2).
  auto formula_levels = [](const ModelParams& p) {
    const ClusterEnergies triple = perturbative_cluster_energies(p, 1, -18);  // (n=1, m=-9)
    std::vector<double> out{-10.0 * p.omega, triple.lower, triple.center, triple.upper};
    std::sort(out.begin(), out.end());
    return out;
  };
  auto exact_levels = [](const ModelParams& p) {
    ConvergeOptions opts;
    opts.tol = 1e-12;
    const SpectralData spec = converge_cutoff(p, +1, 4, opts);
    return std::vector<double>{spec.eigenvalues[0], spec.eigenvalues[1], spec.eigenvalues[2],
                               spec.eigenvalues[3]};
  };

  std::vector<double> err[2];
  for (int k = 0; k < 2; ++k) {
    const double g = 1e-3 * (k + 1);
    const ModelParams p = params(1, 1, g, g, 10, ModelParams::kAutoCutoff);
    const std::vector<double> exact = exact_levels(p);
    const std::vector<double> formula = formula_levels(p);
    for (int i = 0; i < 4; ++i) {
      err[k].push_back(std::abs(exact[static_cast<size_t>(i)] - formula[static_cast<size_t>(i)]));
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (err[0][static_cast<size_t>(i)] > 1e-11) {  // quadratic scaling above the solver floor
      const double ratio = err[1][static_cast<size_t>(i)] / err[0][static_cast<size_t>(i)];
      CHECK(ratio == doctest::Approx(4.0).epsilon(0.15));
    } else {
      CHECK(err[1][static_cast<size_t>(i)] <= 1e-10);
    }
  }
}
