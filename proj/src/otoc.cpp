#include "admdiag/otoc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace admdiag {

namespace {

constexpr double kTailFraction = 1e-8;    // certified omitted weight, relative to Z
constexpr double kActiveFraction = 1e-10; // suffix weight defining the active levels

Eigen::VectorXd relative_weights(const Eigen::VectorXd& evals, double beta) {
  // Shifted by E0 for the internal protocol arithmetic; ratios to Z are
  // unchanged by the shift.
  return (-beta * (evals.array() - evals[0])).exp().matrix();
}

int active_level_count(const Eigen::VectorXd& weights) {
  const double z = weights.sum();
  double suffix = 0.0;
  for (int i = static_cast<int>(weights.size()) - 1; i >= 0; --i) {
    suffix += weights[i];
    if (suffix > kActiveFraction * z) return std::min<int>(i + 2, static_cast<int>(weights.size()));
  }
  return 1;
}

bool tail_certified(const Eigen::VectorXd& weights, double beta, const ModelParams& params) {
  const int band = params.two_j() + 1;
  if (weights.size() <= band) return false;
  const double r = std::exp(-beta * params.omega);
  const double band_weight = weights.tail(band).sum();
  return band_weight * r / (1.0 - r) < kTailFraction * weights.sum();
}

}  // namespace

double thermal_tail_bound(const Eigen::VectorXd& eigenvalues, double beta,
                          const ModelParams& params) {
  if (!(beta > 0.0)) throw std::invalid_argument("tail bound requires beta > 0");
  const int band = params.two_j() + 1;
  const Eigen::VectorXd w = relative_weights(eigenvalues, beta);
  if (w.size() <= band) return w.sum();
  const double r = std::exp(-beta * params.omega);
  return w.tail(band).sum() * r / (1.0 - r);
}

ThermalEnsemble thermal_ensemble(const SpectralData& spec, double beta) {
  if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
  if (spec.dimension() == 0) throw std::invalid_argument("empty spectrum");

  ThermalEnsemble out;
  out.beta = beta;
  out.weights = (-beta * spec.eigenvalues.array()).exp().matrix();
  out.Z = out.weights.sum();
  if (beta > 0.0 && !tail_certified(relative_weights(spec.eigenvalues, beta), beta, spec.params)) {
    std::ostringstream os;
    os << "Boltzmann tail beyond the truncated spectrum is not certified below " << kTailFraction
       << " of Z at beta=" << beta << " (" << spec.params.describe()
       << "); increase the Fock cutoff";
    throw TailWeightError(os.str());
  }
  return out;
}

OtocSeries otoc_f(const SpectralData& spec, const ThermalEnsemble& ensemble,
                  const OperatorMatrix& v, const OperatorMatrix& w,
                  const std::vector<double>& times) {
  if (!spec.has_vectors()) throw std::invalid_argument("otoc_f requires eigenvectors");
  const int dim = spec.dimension();
  if (v.dimension() != dim || w.dimension() != dim || ensemble.weights.size() != dim) {
    throw std::invalid_argument("otoc_f operands live on different bases");
  }
  const double vscale = std::max(1.0, v.entries.cwiseAbs().maxCoeff());
  const double wscale = std::max(1.0, w.entries.cwiseAbs().maxCoeff());
  if ((v.entries - v.entries.transpose()).cwiseAbs().maxCoeff() > 1e-12 * vscale ||
      (w.entries - w.entries.transpose()).cwiseAbs().maxCoeff() > 1e-12 * wscale) {
    throw std::invalid_argument("otoc_f requires Hermitian (real symmetric) V and W");
  }

  const Eigen::MatrixXd& q = *spec.eigenvectors;
  const Eigen::VectorXd& evals = spec.eigenvalues;

  auto to_eigenbasis = [&](const OperatorMatrix& op) -> Eigen::MatrixXd {
    if (op.entries.isDiagonal(0.0)) {
      return q.transpose() * (op.entries.diagonal().asDiagonal() * q);
    }
    return q.transpose() * op.entries * q;
  };
  const Eigen::MatrixXd v_eig = to_eigenbasis(v);
  const bool same_operator = (&v == &w) || (v.entries == w.entries);
  const Eigen::MatrixXd w_eig = same_operator ? v_eig : to_eigenbasis(w);

  // Boltzmann weights shifted by E0: the shift cancels in weights/Z.
  const Eigen::VectorXd rho = relative_weights(evals, ensemble.beta);
  const double z = rho.sum();

  OtocSeries out;
  out.params = spec.params;
  out.parity = spec.parity;
  out.beta = ensemble.beta;
  out.thermal_levels = active_level_count(rho);
  out.times = times;
  out.f.reserve(times.size());
  out.deficit.reserve(times.size());

  // Tr(rho V W(t) V W(t)) / Z with W(t)_ab = e^{i(Ea-Eb)t} W_ab.  The phase
  // matrix is the rank-2 combination of cos(E t), sin(E t) vectors; the trace
  // costs two real GEMMs per time.
  auto evaluate = [&](double t) -> std::pair<double, double> {
    const Eigen::VectorXd c = (evals.array() * t).cos().matrix();
    const Eigen::VectorXd s = (evals.array() * t).sin().matrix();
    const Eigen::MatrixXd b_re = w_eig.cwiseProduct(c * c.transpose() + s * s.transpose());
    const Eigen::MatrixXd b_im = w_eig.cwiseProduct(s * c.transpose() - c * s.transpose());
    const Eigen::MatrixXd a_re = v_eig * b_re;
    const Eigen::MatrixXd a_im = v_eig * b_im;
    const Eigen::VectorXd row_re =
        (a_re.cwiseProduct(a_re.transpose()) - a_im.cwiseProduct(a_im.transpose()))
            .rowwise()
            .sum();
    const Eigen::VectorXd row_im =
        (a_re.cwiseProduct(a_im.transpose()) + a_im.cwiseProduct(a_re.transpose()))
            .rowwise()
            .sum();
    return {rho.dot(row_re) / z, rho.dot(row_im) / z};
  };

  const auto [f0_re, f0_im] = evaluate(0.0);
  out.f0 = f0_re;
  if (out.f0 == 0.0) throw std::invalid_argument("F(0) vanishes; deficit undefined");

  double max_residual = std::abs(f0_im) / std::hypot(f0_re, f0_im);
  for (double t : times) {
    const auto [re, im] = evaluate(t);
    out.f.push_back(re);
    out.deficit.push_back(1.0 - re / out.f0);
    const double mag = std::hypot(re, im);
    if (mag > 0.0) max_residual = std::max(max_residual, std::abs(im) / mag);
  }
  out.max_imag_residual = max_residual;
  return out;
}

namespace {

SpectralData resolve_otoc_spectrum(const ModelParams& params, double beta,
                                   const OtocOptions& opts) {
  constexpr int parity = +1;
  if (!params.auto_cutoff()) {
    return diagonalize(build_hamiltonian(enumerate_basis(params, parity)), true);
  }
  if (beta == 0.0) {
    throw std::invalid_argument(
        "beta = 0 cannot certify a truncation tail; pass an explicit n_max");
  }

  int cutoff = std::max(32, static_cast<int>(std::ceil(24.0 / (beta * params.omega))));
  cutoff = std::min(cutoff, opts.ceiling);
  Eigen::VectorXd prev;
  while (cutoff <= opts.ceiling) {
    SpectralData spec =
        diagonalize(build_hamiltonian(enumerate_basis(params.with_cutoff(cutoff), parity)), false);
    const Eigen::VectorXd w = relative_weights(spec.eigenvalues, beta);
    const int active = active_level_count(w);
    bool stable = false;
    if (prev.size() > 0) {
      const int k = std::min<int>(active, static_cast<int>(prev.size()));
      double delta = 0.0;
      for (int i = 0; i < k; ++i) delta = std::max(delta, std::abs(spec.eigenvalues[i] - prev[i]));
      stable = delta <= opts.tol;
    }
    if (stable && tail_certified(w, beta, spec.params)) {
      SpectralData full = diagonalize(
          build_hamiltonian(enumerate_basis(params.with_cutoff(cutoff), parity)), true);
      full.converged_count = active;
      full.tolerance = opts.tol;
      return full;
    }
    prev = std::move(spec.eigenvalues);
    cutoff = std::max(cutoff + 1, (cutoff * 3) / 2);
  }
  std::ostringstream os;
  os << "cutoff ceiling " << opts.ceiling
     << " exceeded before the thermal spectrum stabilised (beta=" << beta << ", "
     << params.describe() << ")";
  throw ConvergenceError(os.str());
}

}  // namespace

OtocSeries otoc_series_at(const ModelParams& params, double beta,
                          const std::vector<double>& times, double shift,
                          const OtocOptions& opts) {
  params.validate();
  const SpectralData spec = resolve_otoc_spectrum(params, beta, opts);
  const ThermalEnsemble ensemble = thermal_ensemble(spec, beta);
  const SectorBasis basis = enumerate_basis(spec.params, spec.parity);
  const OperatorMatrix v = observable_matrix(basis, Observable::number_plus_shift(shift));
  OtocSeries series = otoc_f(spec, ensemble, v, v, times);
  series.observable = Observable::number_plus_shift(shift).label();
  return series;
}

DeficitResult otoc_deficit_at(const ModelParams& params, double beta, double t, double shift,
                              const OtocOptions& opts) {
  std::vector<double> times;
  if (opts.time_avg_halfwidth > 0.0) {
    const int samples = std::max(2, opts.time_avg_samples);
    times.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      times.push_back(t - opts.time_avg_halfwidth +
                      2.0 * opts.time_avg_halfwidth * i / (samples - 1));
    }
  } else {
    times.push_back(t);
  }

  const OtocSeries series = otoc_series_at(params, beta, times, shift, opts);
  DeficitResult out;
  out.f0 = series.f0;
  out.n_max = series.params.n_max;
  out.thermal_levels = series.thermal_levels;
  double f_sum = 0.0;
  double d_sum = 0.0;
  for (size_t i = 0; i < series.times.size(); ++i) {
    f_sum += series.f[i];
    d_sum += series.deficit[i];
  }
  out.f_t = f_sum / static_cast<double>(series.times.size());
  out.deficit = d_sum / static_cast<double>(series.times.size());
  return out;
}

}  // namespace admdiag
