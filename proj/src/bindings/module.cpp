// Python bindings for the core operations: model construction, spectra,
// level statistics, the butterfly correlator and the overlap measure.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "admdiag/diagnostics.hpp"
#include "admdiag/model.hpp"
#include "admdiag/otoc.hpp"
#include "admdiag/overlap.hpp"
#include "admdiag/rmt.hpp"
#include "admdiag/spectra.hpp"
#include "admdiag/sweep.hpp"

namespace py = pybind11;
using namespace admdiag;

namespace {

ModelParams make_params(double omega, double omega0, double g1, double g2, double j,
                        std::optional<int> n_max) {
  ModelParams p;
  p.omega = omega;
  p.omega0 = omega0;
  p.g1 = g1;
  p.g2 = g2;
  p.j = j;
  p.n_max = n_max.value_or(ModelParams::kAutoCutoff);
  p.validate();
  return p;
}

ReferenceEnsemble ensemble_from(const std::string& kind) {
  if (kind == "poisson") return ReferenceEnsemble::Poisson;
  if (kind == "wigner_dyson") return ReferenceEnsemble::WignerDyson;
  throw std::invalid_argument("kind must be 'poisson' or 'wigner_dyson'");
}

LevelWindow window_from(int lo, int hi, std::optional<double> lambda) {
  LevelWindow w;
  w.lo = lo;
  w.hi = hi;
  w.lambda = lambda;
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact diagonalization and ergodicity diagnostics for the anisotropic Dicke model";

  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<TailWeightError>(m, "TailWeightError", PyExc_RuntimeError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init(&make_params), py::arg("omega") = 1.0, py::arg("omega0") = 1.0,
           py::arg("g1") = 0.0, py::arg("g2") = 0.0, py::arg("j") = 0.5,
           py::arg("n_max") = std::nullopt)
      .def_readwrite("omega", &ModelParams::omega)
      .def_readwrite("omega0", &ModelParams::omega0)
      .def_readwrite("g1", &ModelParams::g1)
      .def_readwrite("g2", &ModelParams::g2)
      .def_readwrite("j", &ModelParams::j)
      .def_readwrite("n_max", &ModelParams::n_max)
      .def_property_readonly("auto_cutoff", &ModelParams::auto_cutoff)
      .def("with_cutoff", &ModelParams::with_cutoff)
      .def("__repr__", [](const ModelParams& p) { return "ModelParams(" + p.describe() + ")"; });

  m.attr("AUTO_CUTOFF") = py::int_(ModelParams::kAutoCutoff);
  m.def("symmetry_partner", &symmetry_partner, py::arg("params"));

  py::class_<SpectralData>(m, "SpectralData")
      .def_readonly("params", &SpectralData::params)
      .def_readonly("parity", &SpectralData::parity)
      .def_readonly("eigenvalues", &SpectralData::eigenvalues)
      .def_property_readonly("eigenvectors",
                             [](const SpectralData& s) -> std::optional<Eigen::MatrixXd> {
                               return s.eigenvectors;
                             })
      .def_readonly("converged_count", &SpectralData::converged_count)
      .def_readonly("tolerance", &SpectralData::tolerance)
      .def_property_readonly("dimension", &SpectralData::dimension);

  m.def(
      "basis_states",
      [](const ModelParams& params, int parity) {
        const SectorBasis basis = enumerate_basis(params, parity);
        std::vector<std::pair<int, double>> out;
        out.reserve(static_cast<size_t>(basis.dimension()));
        for (const BasisState& s : basis.states()) out.emplace_back(s.n, s.m());
        return out;
      },
      py::arg("params"), py::arg("parity") = +1,
      "Ordered (n, m) labels of one parity sector");

  m.def(
      "sector_dimension",
      [](const ModelParams& params, int parity) {
        return enumerate_basis(params, parity).dimension();
      },
      py::arg("params"), py::arg("parity") = +1);

  m.def(
      "hamiltonian",
      [](const ModelParams& params, int parity) {
        return build_hamiltonian(enumerate_basis(params, parity)).entries;
      },
      py::arg("params"), py::arg("parity") = +1,
      "Dense sector Hamiltonian (requires an explicit n_max)");

  m.def(
      "diagonalize_sector",
      [](const ModelParams& params, int parity, bool want_vectors) {
        return diagonalize(build_hamiltonian(enumerate_basis(params, parity)), want_vectors);
      },
      py::arg("params"), py::arg("parity") = +1, py::arg("want_vectors") = false);

  m.def(
      "converge_cutoff",
      [](const ModelParams& params, int parity, int k, double tol, int ceiling,
         bool want_vectors) {
        ConvergeOptions opts;
        opts.tol = tol;
        opts.ceiling = ceiling;
        opts.want_vectors = want_vectors;
        return converge_cutoff(params, parity, k, opts);
      },
      py::arg("params"), py::arg("parity") = +1, py::arg("k") = 1000, py::arg("tol") = 1e-8,
      py::arg("ceiling") = 5000, py::arg("want_vectors") = false);

  m.def(
      "ground_state_parity",
      [](const ModelParams& params) {
        const ParityCheckResult r = ground_state_parity_check(params);
        return py::make_tuple(r.parity, r.tie, r.e_positive, r.e_negative);
      },
      py::arg("params"), "(parity, tie, E+, E-) of the sector ground levels");

  m.def(
      "order_parameter", [](const ModelParams& params) { return order_parameter(params); },
      py::arg("params"));

  py::class_<RStatResult>(m, "RStatResult")
      .def_readonly("ratios", &RStatResult::ratios)
      .def_readonly("mean", &RStatResult::mean)
      .def_readonly("count", &RStatResult::count)
      .def_readonly("zero_spacing_count", &RStatResult::zero_spacing_count);

  m.def(
      "r_statistic",
      [](const SpectralData& spec, int lo, int hi, std::optional<double> lambda) {
        return r_statistic(spec, window_from(lo, hi, lambda));
      },
      py::arg("spec"), py::arg("lo") = 200, py::arg("hi") = 1000,
      py::arg("lambda") = std::nullopt);

  m.def("r_statistic_of_spacings", &r_statistic_of_spacings, py::arg("spacings"));

  m.def(
      "spacing_series",
      [](const SpectralData& spec, int lo, int hi, std::optional<double> lambda, bool local,
         int halfwidth) {
        const SpacingSeries s =
            spacing_series(spec, window_from(lo, hi, lambda),
                           local ? Unfolding::LocalMean : Unfolding::GlobalMean, halfwidth);
        return py::make_tuple(s.raw, s.normalized, s.mean_raw);
      },
      py::arg("spec"), py::arg("lo") = 200, py::arg("hi") = 1000,
      py::arg("lambda") = std::nullopt, py::arg("local_unfolding") = false,
      py::arg("halfwidth") = 25, "(raw, normalized, mean_raw) spacing series");

  m.def(
      "reference_pdf",
      [](const std::string& kind, double s) { return reference_pdf(ensemble_from(kind), s); },
      py::arg("kind"), py::arg("s"));

  m.def(
      "ks_distance",
      [](const std::vector<double>& samples, const std::string& kind) {
        return ks_distance(samples, ensemble_from(kind));
      },
      py::arg("samples"), py::arg("kind"));

  m.def(
      "perturbative_cluster_energies",
      [](const ModelParams& params, int n, double mm) {
        const int twice_m = static_cast<int>(std::lround(2.0 * mm));
        const ClusterEnergies c = perturbative_cluster_energies(params, n, twice_m);
        return py::make_tuple(c.lower, c.center, c.upper);
      },
      py::arg("params"), py::arg("n"), py::arg("m"));

  m.def("poisson_reference_mean_r", &poisson_reference_mean_r, py::arg("count"),
        py::arg("seed") = 1234);
  m.def("goe_reference_mean_r", &goe_reference_mean_r, py::arg("dim"), py::arg("matrices"),
        py::arg("seed") = 1234);

  py::class_<OtocSeries>(m, "OtocSeries")
      .def_readonly("times", &OtocSeries::times)
      .def_readonly("f", &OtocSeries::f)
      .def_readonly("deficit", &OtocSeries::deficit)
      .def_readonly("f0", &OtocSeries::f0)
      .def_readonly("params", &OtocSeries::params)
      .def_readonly("beta", &OtocSeries::beta)
      .def_readonly("thermal_levels", &OtocSeries::thermal_levels)
      .def_readonly("max_imag_residual", &OtocSeries::max_imag_residual);

  m.def(
      "otoc_series",
      [](const ModelParams& params, double beta, const std::vector<double>& times, double shift,
         double tol, int ceiling) {
        OtocOptions opts;
        opts.tol = tol;
        opts.ceiling = ceiling;
        return otoc_series_at(params, beta, times, shift, opts);
      },
      py::arg("params"), py::arg("beta") = 0.1, py::arg("times") = std::vector<double>{100.0},
      py::arg("shift") = 100.0, py::arg("tol") = 1e-8, py::arg("ceiling") = 5000);

  m.def(
      "otoc_deficit",
      [](const ModelParams& params, double beta, double t, double shift, double time_avg_delta,
         double tol, int ceiling) {
        OtocOptions opts;
        opts.tol = tol;
        opts.ceiling = ceiling;
        opts.time_avg_halfwidth = time_avg_delta;
        const DeficitResult r = otoc_deficit_at(params, beta, t, shift, opts);
        return py::make_tuple(r.deficit, r.f0, r.n_max);
      },
      py::arg("params"), py::arg("beta") = 0.1, py::arg("t") = 100.0, py::arg("shift") = 100.0,
      py::arg("time_avg_delta") = 0.0, py::arg("tol") = 1e-8, py::arg("ceiling") = 5000,
      "(deficit, F0, resolved n_max) of 1 - F(t)/F(0)");

  py::class_<OverlapResult>(m, "OverlapResult")
      .def_readonly("max_overlap", &OverlapResult::max_overlap)
      .def_readonly("eigenspace_index", &OverlapResult::eigenspace_index)
      .def_readonly("target_energy", &OverlapResult::target_energy)
      .def_readonly("completeness", &OverlapResult::completeness)
      .def_readonly("degeneracy_tol", &OverlapResult::degeneracy_tol)
      .def_readonly("eigenspace_count", &OverlapResult::eigenspace_count);

  m.def("max_overlap", &max_overlap, py::arg("reference"), py::arg("target"),
        py::arg("degeneracy_tol") = -1.0);

  m.def(
      "max_overlap_pair",
      [](const ModelParams& reference, const ModelParams& target, int parity, int k, double tol,
         int ceiling) {
        ConvergeOptions opts;
        opts.tol = tol;
        opts.ceiling = ceiling;
        return max_overlap_pair(reference, target, parity, k, opts);
      },
      py::arg("reference"), py::arg("target"), py::arg("parity") = +1, py::arg("k") = 100,
      py::arg("tol") = 1e-8, py::arg("ceiling") = 5000);

  m.def("hose_taylor_fraction", &hose_taylor_fraction, py::arg("result"),
        py::arg("threshold") = 0.5);
}
