#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

namespace admdiag {

/// GOE sample: independent Gaussian entries, off-diagonal variance half the
/// diagonal one.
Eigen::MatrixXd sample_goe(int dim, std::mt19937_64& rng);

/// Spacings of the central 50% of the spectrum of one GOE sample (edge
/// effects trimmed).
std::vector<double> goe_bulk_spacings(int dim, std::mt19937_64& rng);

/// <r> over `count` ratios of consecutive i.i.d. exponential spacings.
/// Converges to 2 ln 2 - 1.
double poisson_reference_mean_r(long count, std::uint64_t seed);

/// <r> pooled over `matrices` GOE samples of size `dim` (bulk levels only).
/// Converges to 0.5307.
double goe_reference_mean_r(int dim, int matrices, std::uint64_t seed);

}  // namespace admdiag
