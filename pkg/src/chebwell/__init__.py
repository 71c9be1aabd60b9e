"""Discrete Chebyshev square-well chains and their Hermitizing metric operators.

The package builds the non-Hermitian first-kind well Hamiltonian (and its
Hermitian second-kind sibling), solves both in closed form, constructs every
eligible metric operator -- spectral, diagonal, tridiagonal, pentadiagonal and
general band ansatz -- and maps the parameter domains where the candidates
stay positive definite.
"""

import os

# Thread-count override must land in the environment before the BLAS backing
# numpy initialises its thread pools.
_threads = os.environ.get("CHEBWELL_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)
del os, _threads

from .bandmat import BandSymmetricMatrix
from .chebpoly import PolyKind, cheb_eval, cheb_zeros
from .lattice import (
    ChainHamiltonian,
    EigenSystem,
    ModelKind,
    ResidualReport,
    build_hamiltonian,
    closed_form_eigensystem,
    closed_form_energies,
    verify_eigensystem,
)
from .metrics import (
    HermitizeReport,
    MetricCandidate,
    MetricSource,
    band_metric_basis,
    diagonal_metric,
    hermitize_check,
    k_matrix,
    l_matrix,
    s_inner_product,
    spectral_metric,
)
from .numerics import EigenDecomposition, min_eig_banded, null_space, sym_eigs
from .analysis import (
    BoundaryLinearityReport,
    DomainBoundary,
    HorizonFormulaReport,
    Scan2D,
    ScanRecord,
    SignatureLabel,
    SignatureReport,
    SmallLambdaStar,
    Sweep1D,
    SweepRecord,
    asymptotic_slopes,
    boundary_linearity_test,
    classify,
    compare_horizon_formulas,
    horizon_roots_1d,
    scan_2d,
    small_lambda_slopes,
    sweep_1d,
)

__version__ = "0.1.0"

__all__ = [
    "BandSymmetricMatrix",
    "BoundaryLinearityReport",
    "ChainHamiltonian",
    "DomainBoundary",
    "EigenDecomposition",
    "EigenSystem",
    "HermitizeReport",
    "HorizonFormulaReport",
    "MetricCandidate",
    "MetricSource",
    "ModelKind",
    "PolyKind",
    "ResidualReport",
    "Scan2D",
    "ScanRecord",
    "SignatureLabel",
    "SignatureReport",
    "SmallLambdaStar",
    "Sweep1D",
    "SweepRecord",
    "asymptotic_slopes",
    "band_metric_basis",
    "boundary_linearity_test",
    "build_hamiltonian",
    "cheb_eval",
    "cheb_zeros",
    "classify",
    "closed_form_eigensystem",
    "closed_form_energies",
    "compare_horizon_formulas",
    "diagonal_metric",
    "hermitize_check",
    "horizon_roots_1d",
    "k_matrix",
    "l_matrix",
    "min_eig_banded",
    "null_space",
    "s_inner_product",
    "scan_2d",
    "small_lambda_slopes",
    "spectral_metric",
    "sweep_1d",
    "sym_eigs",
    "verify_eigensystem",
]
