#pragma once

#include <vector>

#include "admdiag/spectra.hpp"

namespace admdiag {

/// Maximum squared overlap of each target eigenstate with the eigenspaces of
/// a reference spectrum on the same truncated basis.  Degenerate reference
/// levels are grouped into eigenspaces first, which makes the result
/// invariant under the arbitrary eigenvector choice inside a degenerate
/// subspace.
struct OverlapResult {
  ModelParams reference_params;
  ModelParams target_params;
  int parity = +1;

  std::vector<double> max_overlap;     ///< per target state, each in [0, 1]
  std::vector<int> eigenspace_index;   ///< argmax reference eigenspace
  std::vector<double> target_energy;
  std::vector<double> completeness;    ///< summed squared projections (= 1)

  double degeneracy_tol = 0.0;
  int eigenspace_count = 0;
};

/// degeneracy_tol < 0 selects the default 1e-9 * (reference spectral width).
OverlapResult max_overlap(const SpectralData& reference, const SpectralData& target,
                          double degeneracy_tol = -1.0);

/// Fraction of target states with max_overlap above the threshold; the
/// non-ergodicity criterion of the overlap measure uses threshold 1/2.
double hose_taylor_fraction(const OverlapResult& result, double threshold = 0.5);

/// Converges both parameter sets for the lowest `k` levels, imposes the
/// larger of the two resolved cutoffs on both so the bases are identical,
/// and reports the overlaps of the first `k` target states.
OverlapResult max_overlap_pair(const ModelParams& reference, const ModelParams& target,
                               int parity, int k, const ConvergeOptions& opts = {});

}  // namespace admdiag
