"""Numerical kernels shared by the metric constructors and the domain scans.

Three operations live here: a dense symmetric eigensolver, an SVD-based null
space extractor, and a smallest-eigenvalue query for symmetric band matrices
that runs on the inertia-counting kernels (compiled when available).
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bandmat import BandSymmetricMatrix

__all__ = [
    "EigenDecomposition",
    "count_eigs_below",
    "min_eig_banded",
    "null_space",
    "sym_eigs",
]


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Spectrum of a symmetric matrix.

    Attributes
    ----------
    values : ndarray
        Eigenvalues in ascending order.
    vectors : ndarray
        Orthonormal eigenvectors, one per column, aligned with ``values``.
    """

    values: np.ndarray
    vectors: np.ndarray


def sym_eigs(a, sym_tol=1e-12):
    """Full spectrum of a symmetric matrix via the dense eigensolver.

    Parameters
    ----------
    a : ndarray
        Square matrix, symmetric to ``sym_tol`` relative to its largest
        entry.
    sym_tol : float, optional
        Relative symmetry tolerance.

    Returns
    -------
    EigenDecomposition
        Ascending eigenvalues with orthonormal eigenvectors.

    Raises
    ------
    ValueError
        If ``a`` is not square or not symmetric within tolerance.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = np.max(np.abs(a)) if a.size else 0.0
    defect = np.max(np.abs(a - a.T)) if a.size else 0.0
    if defect > sym_tol * max(1.0, scale):
        raise ValueError(
            f"matrix is not symmetric: defect {defect:.3e} exceeds "
            f"{sym_tol:.1e} relative tolerance"
        )
    values, vectors = np.linalg.eigh(a)
    return EigenDecomposition(values=values, vectors=vectors)


def null_space(a, tol=1e-10):
    """Orthonormal basis of the kernel of ``a``.

    Returns the right singular vectors whose singular values fall below
    ``tol`` times the largest singular value.  For a zero matrix every
    direction qualifies.

    Parameters
    ----------
    a : ndarray
        Rectangular matrix.
    tol : float
        Relative singular-value cutoff, must be positive.

    Returns
    -------
    ndarray
        Shape (cols, k) with orthonormal columns; k may be zero.  Columns
        are ordered by descending singular value.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    a = np.asarray(a, dtype=float)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    if s.size == 0 or s[0] == 0.0:
        rank = 0
    else:
        rank = int(np.sum(s > tol * s[0]))
    return vh[rank:].T.copy()


def _flat_storage(m):
    if not isinstance(m, BandSymmetricMatrix):
        raise ValueError(f"expected a BandSymmetricMatrix, got {type(m).__name__}")
    return np.ascontiguousarray(m.band_storage()).ravel()


def min_eig_banded(m, tol_abs=1e-13, tol_rel=0.0):
    """Smallest eigenvalue of a symmetric band matrix.

    Runs Gershgorin bracketing plus bisection on the LDL^T inertia count.
    The default absolute tolerance leaves margin under the 1e-12 accuracy
    the boundary searches rely on; for matrices with huge norms the
    bisection stops once the bracket can no longer shrink in double
    precision.

    Parameters
    ----------
    m : BandSymmetricMatrix
        The matrix to query.
    tol_abs, tol_rel : float, optional
        Bracket-width stopping rule ``tol_abs + tol_rel * max(|lo|, |hi|)``.

    Returns
    -------
    float
        The smallest eigenvalue.
    """
    flat = _flat_storage(m)
    return _kernels.min_eig(flat, m.dim, m.half_bandwidth, tol_abs, tol_rel)


def count_eigs_below(m, sigma):
    """Number of eigenvalues of a symmetric band matrix below ``sigma``.

    Eigenvalues exactly at ``sigma`` are counted as below; this is the raw
    inertia count used by the crossing detectors.
    """
    flat = _flat_storage(m)
    scale = m.max_abs()
    asig = -sigma if sigma < 0.0 else sigma
    mx = scale if scale > asig else asig
    if mx < 1.0:
        mx = 1.0
    pivmin = 2.2250738585072014e-308 * mx * mx
    return _kernels.count_below(flat, m.dim, m.half_bandwidth, sigma, pivmin)
