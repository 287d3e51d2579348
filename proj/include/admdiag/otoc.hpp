#pragma once

#include <string>
#include <vector>

#include "admdiag/spectra.hpp"

namespace admdiag {

/// The truncated spectrum cannot certify the Boltzmann tail at the requested
/// inverse temperature; the Fock cutoff has to grow.
struct TailWeightError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Boltzmann weights over one sector spectrum.
struct ThermalEnsemble {
  double beta = 0.1;
  Eigen::VectorXd weights;  ///< e^(-beta E_n)
  double Z = 0.0;           ///< partition sum over the sector spectrum
};

/// Geometric bound on the Boltzmann weight omitted by the truncation: levels
/// enter in bands of ~(2j+1) per boson quantum, each further band suppressed
/// by e^(-beta omega), so the omitted weight is at most the weight of the top
/// computed band times r/(1-r) with r = e^(-beta omega).
double thermal_tail_bound(const Eigen::VectorXd& eigenvalues, double beta,
                          const ModelParams& params);

/// Builds the ensemble and certifies the truncation tail (< 1e-8 of Z).
/// beta = 0 is the uniform trace over the truncated sector spectrum; no tail
/// certification is possible there and none is applied.
ThermalEnsemble thermal_ensemble(const SpectralData& spec, double beta);

/// Out-of-time-order correlator F(t) for Hermitian V, W evaluated in the
/// eigenbasis, plus the deficit 1 - F(t)/F(0).  The real part of the trace
/// implements the Hermitian-conjugate symmetrisation exactly.
struct OtocSeries {
  std::vector<double> times;
  std::vector<double> f;
  std::vector<double> deficit;
  double f0 = 0.0;

  ModelParams params;
  int parity = +1;
  double beta = 0.0;
  std::string observable;
  int thermal_levels = 0;        ///< levels carrying all but 1e-10 of Z
  double max_imag_residual = 0;  ///< max |Im z|/|z| of the unsymmetrised trace
};

OtocSeries otoc_f(const SpectralData& spec, const ThermalEnsemble& ensemble,
                  const OperatorMatrix& v, const OperatorMatrix& w,
                  const std::vector<double>& times);

struct OtocOptions {
  double tol = 1e-8;
  int ceiling = 5000;
  double time_avg_halfwidth = 0.0;  ///< 0 disables averaging over [t-d, t+d]
  int time_avg_samples = 9;
};

/// End-to-end pipeline on the positive parity sector: cutoff growth with
/// Boltzmann-tail certification, eigendecomposition with vectors, then F(t)
/// for V = W = a†a + shift at each requested time.
OtocSeries otoc_series_at(const ModelParams& params, double beta,
                          const std::vector<double>& times, double shift,
                          const OtocOptions& opts = {});

struct DeficitResult {
  double deficit = 0.0;  ///< 1 - F(t)/F(0), averaged over the window if enabled
  double f0 = 0.0;
  double f_t = 0.0;
  int n_max = 0;
  int thermal_levels = 0;
};

/// Scalar deficit 1 - F(t)/F(0) used by the phase-diagram sweep.
DeficitResult otoc_deficit_at(const ModelParams& params, double beta, double t, double shift,
                              const OtocOptions& opts = {});

}  // namespace admdiag
