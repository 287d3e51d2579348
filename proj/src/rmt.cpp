#include "admdiag/rmt.hpp"

#include <cmath>
#include <stdexcept>

#include "admdiag/diagnostics.hpp"
#include "admdiag/spectra.hpp"

namespace admdiag {

Eigen::MatrixXd sample_goe(int dim, std::mt19937_64& rng) {
  if (dim < 2) throw std::invalid_argument("GOE sample needs dimension >= 2");
  std::normal_distribution<double> offdiag(0.0, 1.0);
  std::normal_distribution<double> diag(0.0, std::sqrt(2.0));
  Eigen::MatrixXd a(dim, dim);
  for (int col = 0; col < dim; ++col) {
    a(col, col) = diag(rng);
    for (int row = col + 1; row < dim; ++row) {
      const double v = offdiag(rng);
      a(row, col) = v;
      a(col, row) = v;
    }
  }
  return a;
}

std::vector<double> goe_bulk_spacings(int dim, std::mt19937_64& rng) {
  const Eigen::VectorXd evals = symmetric_eigenvalues(sample_goe(dim, rng));
  const int lo = dim / 4;
  const int hi = dim - dim / 4;
  std::vector<double> spacings;
  spacings.reserve(static_cast<size_t>(hi - lo - 1));
  for (int i = lo; i + 1 < hi; ++i) spacings.push_back(evals[i + 1] - evals[i]);
  return spacings;
}

double poisson_reference_mean_r(long count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("need at least one ratio");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp1(1.0);
  double sum = 0.0;
  double prev = exp1(rng);
  for (long i = 0; i < count; ++i) {
    const double cur = exp1(rng);
    sum += std::min(prev / cur, cur / prev);
    prev = cur;
  }
  return sum / static_cast<double>(count);
}

double goe_reference_mean_r(int dim, int matrices, std::uint64_t seed) {
  if (matrices < 1) throw std::invalid_argument("need at least one matrix");
  std::mt19937_64 rng(seed);
  double sum = 0.0;
  long total = 0;
  for (int m = 0; m < matrices; ++m) {
    const RStatResult r = r_statistic_of_spacings(goe_bulk_spacings(dim, rng));
    sum += r.mean * r.count;
    total += r.count;
  }
  return sum / static_cast<double>(total);
}

}  // namespace admdiag
