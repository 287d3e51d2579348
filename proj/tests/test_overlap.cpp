#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "admdiag/overlap.hpp"

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

SpectralData sector_spectrum(const ModelParams& p, int parity = +1) {
  return diagonalize(build_hamiltonian(enumerate_basis(p, parity)), true);
}

Eigen::MatrixXd random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd a(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) a(r, c) = gauss(rng);
  return Eigen::HouseholderQR<Eigen::MatrixXd>(a).householderQ();
}

}  // namespace

TEST_CASE("self overlap is one for every state despite degeneracies") {
  // g = 0 at resonance has heavily degenerate excitation manifolds; the
  // eigenspace grouping must still report unit overlap.
  const SpectralData spec = sector_spectrum(params(1, 1, 0, 0, 2, 30));
  const OverlapResult result = max_overlap(spec, spec);
  for (double m : result.max_overlap) CHECK(m == doctest::Approx(1.0).epsilon(1e-12));
  for (double c : result.completeness) CHECK(std::abs(c - 1.0) <= 1e-10);
  CHECK(hose_taylor_fraction(result) == 1.0);
}

TEST_CASE("a perturbatively close target keeps near-unit overlaps") {
  const SpectralData reference = sector_spectrum(params(1, 1, 0, 0, 2, 40));
  const SpectralData target = sector_spectrum(params(1, 1, 1e-6, 1e-6, 2, 40));
  const OverlapResult result = max_overlap(reference, target);
  for (double m : result.max_overlap) CHECK(m > 0.999);
}

TEST_CASE("completeness holds for a strongly coupled target") {
  const SpectralData reference = sector_spectrum(params(1, 1, 0, 0, 2, 40));
  const SpectralData target = sector_spectrum(params(1, 1, 0.5, 0.5, 2, 40));
  const OverlapResult result = max_overlap(reference, target);
  for (double c : result.completeness) CHECK(std::abs(c - 1.0) <= 1e-10);
  // Strong coupling spreads at least the low-lying states over many
  // reference eigenspaces.
  CHECK(hose_taylor_fraction(result) < 1.0);
}

TEST_CASE("a random orthogonal rotation leaves almost no retained states") {
  const int dim = 1000;
  SpectralData reference;
  reference.params = params(1, 1, 0, 0, 0.5, dim - 1);
  reference.parity = +1;
  reference.eigenvalues = Eigen::VectorXd::LinSpaced(dim, 0.0, dim - 1.0);
  reference.eigenvectors = Eigen::MatrixXd::Identity(dim, dim);
  reference.converged_count = dim;

  SpectralData target = reference;
  std::mt19937_64 rng(31415);
  target.eigenvectors = random_orthogonal(dim, rng);

  const OverlapResult result = max_overlap(reference, target);
  CHECK(hose_taylor_fraction(result) < 0.01);
  for (double c : result.completeness) CHECK(std::abs(c - 1.0) <= 1e-10);
}

TEST_CASE("result is invariant under re-mixing degenerate reference vectors") {
  const ModelParams ref_params = params(1, 1, 0, 0, 2, 24);
  const SpectralData reference = sector_spectrum(ref_params);
  const SpectralData target = sector_spectrum(params(1, 1, 0.3, 0.3, 2, 24));
  const OverlapResult base = max_overlap(reference, target);

  // Apply a random orthogonal rotation inside every degenerate eigenspace;
  // the rotated column set is an equally valid eigenbasis.
  SpectralData remixed = reference;
  std::mt19937_64 rng(999);
  const int dim = reference.dimension();
  const double tol = base.degeneracy_tol;
  int start = 0;
  while (start < dim) {
    int stop = start + 1;
    while (stop < dim &&
           reference.eigenvalues[stop] - reference.eigenvalues[stop - 1] <= tol) {
      ++stop;
    }
    const int size = stop - start;
    if (size > 1) {
      remixed.eigenvectors->middleCols(start, size) =
          reference.eigenvectors->middleCols(start, size) * random_orthogonal(size, rng);
    }
    start = stop;
  }

  const OverlapResult rotated = max_overlap(remixed, target);
  REQUIRE(rotated.max_overlap.size() == base.max_overlap.size());
  for (size_t i = 0; i < base.max_overlap.size(); ++i) {
    CHECK(std::abs(rotated.max_overlap[i] - base.max_overlap[i]) <= 1e-10);
  }
}

TEST_CASE("retained fraction decreases away from the integrable reference") {
  const ModelParams reference = params(1, 1, 0, 0, 2, ModelParams::kAutoCutoff);
  auto fraction = [&](double g) {
    const OverlapResult result = max_overlap_pair(
        reference, params(1, 1, g, g, 2, ModelParams::kAutoCutoff), +1, 25);
    return hose_taylor_fraction(result);
  };
  const double weak = fraction(1e-3);
  const double strong = fraction(0.5);
  CHECK(weak == 1.0);
  CHECK(strong < weak);
}

TEST_CASE("pair driver imposes a common cutoff and trims to k states") {
  const OverlapResult result =
      max_overlap_pair(params(1, 1, 0, 0, 1.5, ModelParams::kAutoCutoff),
                       params(1, 1, 0.4, 0.4, 1.5, ModelParams::kAutoCutoff), +1, 15);
  CHECK(result.reference_params.n_max == result.target_params.n_max);
  CHECK(result.max_overlap.size() == 15);
  for (double c : result.completeness) CHECK(std::abs(c - 1.0) <= 1e-10);
}

TEST_CASE("mismatched bases and missing vectors are rejected") {
  const SpectralData a = sector_spectrum(params(1, 1, 0, 0, 1, 20));
  const SpectralData b = sector_spectrum(params(1, 1, 0, 0, 1, 24));
  CHECK_THROWS_AS(max_overlap(a, b), std::invalid_argument);

  const SpectralData no_vectors =
      diagonalize(build_hamiltonian(enumerate_basis(params(1, 1, 0, 0, 1, 20), +1)), false);
  CHECK_THROWS_AS(max_overlap(a, no_vectors), std::invalid_argument);

  const SpectralData minus = sector_spectrum(params(1, 1, 0, 0, 1, 20), -1);
  CHECK_THROWS_AS(max_overlap(a, minus), std::invalid_argument);
}
