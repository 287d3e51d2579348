"""Exact diagonalization and ergodicity diagnostics for the anisotropic Dicke model."""

from ._core import (
    AUTO_CUTOFF,
    ConvergenceError,
    ModelParams,
    OtocSeries,
    OverlapResult,
    RStatResult,
    SpectralData,
    TailWeightError,
    basis_states,
    converge_cutoff,
    diagonalize_sector,
    goe_reference_mean_r,
    ground_state_parity,
    hamiltonian,
    hose_taylor_fraction,
    ks_distance,
    max_overlap,
    max_overlap_pair,
    order_parameter,
    otoc_deficit,
    otoc_series,
    perturbative_cluster_energies,
    poisson_reference_mean_r,
    r_statistic,
    r_statistic_of_spacings,
    reference_pdf,
    sector_dimension,
    spacing_series,
    symmetry_partner,
)

__version__ = "0.1.0"

__all__ = [
    "AUTO_CUTOFF",
    "ConvergenceError",
    "ModelParams",
    "OtocSeries",
    "OverlapResult",
    "RStatResult",
    "SpectralData",
    "TailWeightError",
    "basis_states",
    "converge_cutoff",
    "diagonalize_sector",
    "goe_reference_mean_r",
    "ground_state_parity",
    "hamiltonian",
    "hose_taylor_fraction",
    "ks_distance",
    "max_overlap",
    "max_overlap_pair",
    "order_parameter",
    "otoc_deficit",
    "otoc_series",
    "perturbative_cluster_energies",
    "poisson_reference_mean_r",
    "r_statistic",
    "r_statistic_of_spacings",
    "reference_pdf",
    "sector_dimension",
    "spacing_series",
    "symmetry_partner",
]
