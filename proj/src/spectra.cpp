#include "admdiag/spectra.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

extern "C" void openblas_set_num_threads(int);

namespace admdiag {

namespace {

// A sweep cell must be a pure function of its inputs regardless of how many
// worker threads run concurrently, so BLAS-level threading stays off.
void pin_blas_threads() {
  static std::once_flag flag;
  std::call_once(flag, [] { openblas_set_num_threads(1); });
}

void run_dsyevd(Eigen::MatrixXd& a, Eigen::VectorXd& w, bool want_vectors) {
  pin_blas_threads();
  const auto n = static_cast<lapack_int>(a.rows());
  w.resize(n);
  lapack_int info;
  if (want_vectors) {
    info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n, w.data());
  } else {
    info = LAPACKE_dsyevd_2stage(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
  }
  if (info != 0) {
    std::ostringstream os;
    os << "LAPACK dsyevd failed with info=" << info << " at dimension " << n;
    throw EigensolverError(os.str());
  }
}

}  // namespace

Eigen::VectorXd symmetric_eigenvalues(Eigen::MatrixXd a) {
  Eigen::VectorXd w;
  run_dsyevd(a, w, false);
  return w;
}

SpectralData diagonalize(const OperatorMatrix& matrix, bool want_vectors) {
  if (matrix.entries.rows() != matrix.entries.cols()) {
    throw std::invalid_argument("diagonalize requires a square matrix");
  }
  SpectralData out;
  out.params = matrix.basis.params();
  out.parity = matrix.basis.parity();

  Eigen::MatrixXd work = matrix.entries;
  try {
    run_dsyevd(work, out.eigenvalues, want_vectors);
  } catch (const EigensolverError& e) {
    throw EigensolverError(std::string(e.what()) + " (" + out.params.describe() + ")");
  }
  if (want_vectors) out.eigenvectors = std::move(work);
  return out;
}

namespace {

SpectralData diagonalize_sector(const ModelParams& params, int parity, bool want_vectors) {
  return diagonalize(build_hamiltonian(enumerate_basis(params, parity)), want_vectors);
}

int grow_cutoff(int n) { return std::max(n + 1, (n * 3) / 2); }

}  // namespace

SpectralData converge_cutoff(const ModelParams& params, int parity, int k,
                             const ConvergeOptions& opts) {
  params.validate();
  if (k < 1) throw std::invalid_argument("converge_cutoff requires k >= 1");
  if (!(opts.tol > 0.0)) throw std::invalid_argument("converge_cutoff requires tol > 0");

  if (!params.auto_cutoff()) {
    // Pinned cutoff: the caller takes the truncation at face value.
    SpectralData spec = diagonalize_sector(params, parity, opts.want_vectors);
    spec.converged_count = std::min(k, spec.dimension());
    spec.tolerance = opts.tol;
    return spec;
  }

  const int two_j = params.two_j();
  int cutoff = std::max(1, (4 * k + two_j) / (two_j + 1));  // ceil(4k / (2j+1))
  Eigen::VectorXd prev;
  while (cutoff <= opts.ceiling) {
    SpectralData spec = diagonalize_sector(params.with_cutoff(cutoff), parity, false);
    if (spec.dimension() >= k && prev.size() >= k) {
      double delta = 0.0;
      for (int i = 0; i < k; ++i) {
        delta = std::max(delta, std::abs(spec.eigenvalues[i] - prev[i]));
      }
      if (delta <= opts.tol) {
        if (opts.want_vectors) {
          spec = diagonalize_sector(params.with_cutoff(cutoff), parity, true);
        }
        spec.converged_count = k;
        spec.tolerance = opts.tol;
        return spec;
      }
    }
    prev = std::move(spec.eigenvalues);
    cutoff = grow_cutoff(cutoff);
  }
  std::ostringstream os;
  os << "cutoff ceiling " << opts.ceiling << " exceeded before the lowest " << k
     << " levels stabilised to " << opts.tol << " (" << params.describe()
     << ", parity=" << parity << ")";
  throw ConvergenceError(os.str());
}

ParityCheckResult ground_state_parity_check(const ModelParams& params,
                                            const ConvergeOptions& opts) {
  ConvergeOptions ground = opts;
  ground.want_vectors = false;
  const double e_pos = converge_cutoff(params, +1, 1, ground).eigenvalues[0];
  const double e_neg = converge_cutoff(params, -1, 1, ground).eigenvalues[0];

  ParityCheckResult out;
  out.e_positive = e_pos;
  out.e_negative = e_neg;
  const double scale = std::max({1.0, std::abs(e_pos), std::abs(e_neg)});
  out.tie = std::abs(e_pos - e_neg) <= 1e-12 * scale;
  out.parity = (e_pos <= e_neg) ? +1 : -1;
  return out;
}

double order_parameter(const ModelParams& params, const ConvergeOptions& opts) {
  const ParityCheckResult check = ground_state_parity_check(params, opts);
  ConvergeOptions with_vectors = opts;
  with_vectors.want_vectors = true;
  const SpectralData spec = converge_cutoff(params, check.parity, 1, with_vectors);

  const SectorBasis basis = enumerate_basis(spec.params, spec.parity);
  const Eigen::VectorXd gs = spec.eigenvectors->col(0);
  double occupation = 0.0;
  for (int i = 0; i < basis.dimension(); ++i) {
    occupation += basis.state(i).n * gs[i] * gs[i];
  }
  return occupation / params.j;
}

}  // namespace admdiag
