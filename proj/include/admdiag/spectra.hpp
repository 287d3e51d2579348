#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>

#include "admdiag/model.hpp"

namespace admdiag {

/// The Fock-cutoff growth loop hit its ceiling without the target levels
/// stabilising.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// LAPACK reported a failure (non-zero info) for a dense symmetric solve.
struct EigensolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Full spectrum of one parity sector at a resolved cutoff.
struct SpectralData {
  ModelParams params;  ///< n_max resolved (never auto)
  int parity = +1;
  Eigen::VectorXd eigenvalues;                   ///< ascending
  std::optional<Eigen::MatrixXd> eigenvectors;   ///< orthonormal columns, aligned
  int converged_count = 0;  ///< low-lying levels certified by the cutoff protocol
  double tolerance = 0.0;

  int dimension() const { return static_cast<int>(eigenvalues.size()); }
  bool has_vectors() const { return eigenvectors.has_value(); }
};

/// Dense symmetric eigendecomposition, full spectrum ascending.  Uses the
/// LAPACK divide-and-conquer driver; the two-stage reduction is selected when
/// eigenvectors are not requested.  Results are deterministic for fixed input
/// (BLAS pinned to one thread).
SpectralData diagonalize(const OperatorMatrix& matrix, bool want_vectors);

/// Eigenvalues (ascending) of a bare dense symmetric matrix; the argument is
/// consumed as workspace.
Eigen::VectorXd symmetric_eigenvalues(Eigen::MatrixXd a);

struct ConvergeOptions {
  double tol = 1e-8;
  int ceiling = 5000;       ///< largest cutoff the growth loop may reach
  bool want_vectors = false;
};

/// Resolves the Fock cutoff for the lowest `k` levels of one sector: starting
/// from ceil(4k/(2j+1)) the cutoff grows by x1.5 until the k lowest
/// eigenvalues move by at most `tol` (max-abs) between successive cutoffs.
/// An explicit n_max in `params` pins the cutoff and skips the protocol.
/// Throws ConvergenceError when the ceiling is exceeded.
SpectralData converge_cutoff(const ModelParams& params, int parity, int k,
                             const ConvergeOptions& opts = {});

struct ParityCheckResult {
  int parity = +1;       ///< sector holding the global ground state
  bool tie = false;      ///< minima agree within tie_tol
  double e_positive = 0.0;
  double e_negative = 0.0;
};

/// Converges the ground level of both sectors and reports which one holds the
/// global minimum.  Ties (within 1e-12 of the spectral scale) are flagged.
ParityCheckResult ground_state_parity_check(const ModelParams& params,
                                            const ConvergeOptions& opts = {});

/// Superradiance order parameter <gs| a†a |gs> / j, with the ground state
/// drawn from the sector found by ground_state_parity_check.
double order_parameter(const ModelParams& params, const ConvergeOptions& opts = {});

}  // namespace admdiag
