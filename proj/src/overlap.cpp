#include "admdiag/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace admdiag {

OverlapResult max_overlap(const SpectralData& reference, const SpectralData& target,
                          double degeneracy_tol) {
  if (!reference.has_vectors() || !target.has_vectors()) {
    throw std::invalid_argument("max_overlap requires eigenvectors on both sides");
  }
  if (reference.parity != target.parity ||
      reference.params.two_j() != target.params.two_j() ||
      reference.params.n_max != target.params.n_max ||
      reference.dimension() != target.dimension()) {
    throw std::invalid_argument("max_overlap requires identical truncated bases");
  }

  const int dim = reference.dimension();
  double tol = degeneracy_tol;
  if (tol < 0.0) {
    const double width = reference.eigenvalues[dim - 1] - reference.eigenvalues[0];
    tol = 1e-9 * std::max(width, 1.0);
  }

  // Group reference levels into eigenspaces: consecutive gaps <= tol chain.
  std::vector<int> group_of(static_cast<size_t>(dim));
  int groups = 0;
  group_of[0] = 0;
  for (int i = 1; i < dim; ++i) {
    if (reference.eigenvalues[i] - reference.eigenvalues[i - 1] > tol) ++groups;
    group_of[static_cast<size_t>(i)] = groups;
  }
  ++groups;

  const Eigen::MatrixXd overlaps = reference.eigenvectors->transpose() * (*target.eigenvectors);

  OverlapResult out;
  out.reference_params = reference.params;
  out.target_params = target.params;
  out.parity = reference.parity;
  out.degeneracy_tol = tol;
  out.eigenspace_count = groups;
  out.max_overlap.resize(static_cast<size_t>(dim));
  out.eigenspace_index.resize(static_cast<size_t>(dim));
  out.target_energy.resize(static_cast<size_t>(dim));
  out.completeness.resize(static_cast<size_t>(dim));

  std::vector<double> group_sum(static_cast<size_t>(groups));
  for (int c = 0; c < dim; ++c) {
    std::fill(group_sum.begin(), group_sum.end(), 0.0);
    double total = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double sq = overlaps(i, c) * overlaps(i, c);
      group_sum[static_cast<size_t>(group_of[static_cast<size_t>(i)])] += sq;
      total += sq;
    }
    int best = 0;
    for (int g = 1; g < groups; ++g) {
      if (group_sum[static_cast<size_t>(g)] > group_sum[static_cast<size_t>(best)]) best = g;
    }
    out.max_overlap[static_cast<size_t>(c)] = group_sum[static_cast<size_t>(best)];
    out.eigenspace_index[static_cast<size_t>(c)] = best;
    out.target_energy[static_cast<size_t>(c)] = target.eigenvalues[c];
    out.completeness[static_cast<size_t>(c)] = total;
  }
  return out;
}

double hose_taylor_fraction(const OverlapResult& result, double threshold) {
  if (result.max_overlap.empty()) return 0.0;
  const auto above = std::count_if(result.max_overlap.begin(), result.max_overlap.end(),
                                   [threshold](double m) { return m > threshold; });
  return static_cast<double>(above) / static_cast<double>(result.max_overlap.size());
}

OverlapResult max_overlap_pair(const ModelParams& reference, const ModelParams& target,
                               int parity, int k, const ConvergeOptions& opts) {
  if (reference.two_j() != target.two_j()) {
    throw std::invalid_argument("overlap pair requires equal pseudospin length");
  }
  ConvergeOptions values_only = opts;
  values_only.want_vectors = false;
  const SpectralData ref_probe = converge_cutoff(reference, parity, k, values_only);
  const SpectralData tgt_probe = converge_cutoff(target, parity, k, values_only);

  // The stricter convergence requirement wins; both sides are rebuilt on the
  // common basis so the overlap matrix is well defined.
  const int common = std::max(ref_probe.params.n_max, tgt_probe.params.n_max);
  SpectralData ref =
      diagonalize(build_hamiltonian(enumerate_basis(reference.with_cutoff(common), parity)), true);
  SpectralData tgt =
      diagonalize(build_hamiltonian(enumerate_basis(target.with_cutoff(common), parity)), true);
  ref.converged_count = k;
  tgt.converged_count = k;
  ref.tolerance = opts.tol;
  tgt.tolerance = opts.tol;

  OverlapResult out = max_overlap(ref, tgt);
  const size_t keep = std::min<size_t>(static_cast<size_t>(k), out.max_overlap.size());
  out.max_overlap.resize(keep);
  out.eigenspace_index.resize(keep);
  out.target_energy.resize(keep);
  out.completeness.resize(keep);
  return out;
}

}  // namespace admdiag
