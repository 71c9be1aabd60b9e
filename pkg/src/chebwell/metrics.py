"""Metric and pseudometric operators for the first-kind well.

A matrix Theta Hermitizes a Hamiltonian H when it satisfies the intertwining
equation H^T Theta = Theta H while being symmetric; if it is also positive
definite it defines a legitimate physical inner product (a, b) = a^T Theta b
under which H is self-adjoint.  Indefinite invertible solutions are
pseudometrics and carry Krein- or Pontryagin-space structure instead.

This module constructs every candidate family the first-kind well admits:

* the universal spectral form, a weighted sum of left-eigenvector outer
  products, positive definite for every nonzero weight vector;
* the closed band forms: the diagonal solution diag(1/2, 1, ..., 1), the
  one-parameter tridiagonal family K(lambda), and the two-parameter
  pentadiagonal family L(lambda, mu);
* the general band ansatz, which assembles the intertwining equation as a
  linear system over the free band entries and returns an orthonormal
  kernel basis.

The closed forms are written out literally and are cross-validated against
the solver basis by the test suite; on any disagreement the solver output is
authoritative.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .bandmat import BandSymmetricMatrix
from .lattice import ChainHamiltonian
from .numerics import null_space, sym_eigs

__all__ = [
    "HermitizeReport",
    "MetricCandidate",
    "MetricSource",
    "band_metric_basis",
    "diagonal_metric",
    "hermitize_check",
    "k_matrix",
    "l_matrix",
    "s_inner_product",
    "spectral_metric",
]


class MetricSource(enum.Enum):
    """How a metric candidate was produced."""

    SPECTRAL = "spectral"
    CLOSED_FORM = "closed-form"
    SOLVER_BASIS = "solver-basis"


@dataclass(frozen=True, eq=False)
class MetricCandidate:
    """A symmetric matrix proposed as a metric or pseudometric.

    Attributes
    ----------
    matrix : BandSymmetricMatrix or ndarray
        The candidate; band storage for the band families, dense for the
        spectral form.
    params : dict
        Named real parameters that produced the candidate (the multiindex),
        e.g. ``{"lambda": 0.3}`` or ``{"nu_1": 1.0, ...}``.
    source : MetricSource
        Provenance tag.
    """

    matrix: object
    params: dict = field(default_factory=dict)
    source: MetricSource = MetricSource.CLOSED_FORM

    @property
    def dim(self):
        if isinstance(self.matrix, BandSymmetricMatrix):
            return self.matrix.dim
        return self.matrix.shape[0]

    def to_dense(self):
        if isinstance(self.matrix, BandSymmetricMatrix):
            return self.matrix.to_dense()
        return np.array(self.matrix, dtype=float)


def _dense_theta(theta):
    """Dense realization of a candidate given in any supported form."""
    if isinstance(theta, MetricCandidate):
        return theta.to_dense()
    if isinstance(theta, BandSymmetricMatrix):
        return theta.to_dense()
    a = np.asarray(theta, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"metric must be a square matrix, got shape {a.shape}")
    return a


def spectral_metric(es, nu=None):
    """Metric from the spectral representation.

    Theta = sum_n nu_n^2 * left_n left_n^T, a sum of outer products of the
    left eigenvectors.  Every term is positive semidefinite of rank one and
    the left vectors span the space, so the sum is positive definite for
    any nonzero weights, and it intertwines with H by construction.

    Parameters
    ----------
    es : EigenSystem
        Eigensystem of the model, typically from closed_form_eigensystem.
    nu : sequence of float, optional
        One nonzero weight per level; defaults to all ones.

    Returns
    -------
    MetricCandidate
        Dense candidate with params nu_1 .. nu_N.

    Raises
    ------
    ValueError
        If any weight is zero (the sum would drop rank) or the length is
        wrong.
    """
    if nu is None:
        nu = np.ones(es.dim)
    nu = np.asarray(nu, dtype=float)
    if nu.shape != (es.dim,):
        raise ValueError(f"nu must have length {es.dim}, got shape {nu.shape}")
    if np.any(nu == 0.0):
        raise ValueError("all weights nu must be nonzero (metric would be singular)")
    l = es.left_vectors
    theta = (l * nu[None, :] ** 2) @ l.T
    theta = 0.5 * (theta + theta.T)
    params = {f"nu_{n + 1}": float(v) for n, v in enumerate(nu)}
    return MetricCandidate(matrix=theta, params=params, source=MetricSource.SPECTRAL)


def diagonal_metric(n):
    """The parameter-free diagonal solution diag(1/2, 1, ..., 1).

    Normalized so the trailing entry is 1; the halved leading entry mirrors
    the halved first component of the left eigenvectors.

    Parameters
    ----------
    n : int
        Dimension, at least 1.

    Returns
    -------
    MetricCandidate
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    band = BandSymmetricMatrix(
        dim=n, half_bandwidth=0, bands=((0.5,) + (1.0,) * (n - 1),)
    )
    return MetricCandidate(matrix=band, params={}, source=MetricSource.CLOSED_FORM)


def k_matrix(n, lam):
    """The one-parameter tridiagonal candidate K(lambda).

    Diagonal (1/2, 1, ..., 1) with every first off-diagonal entry equal to
    lambda.  K(0) is the diagonal metric; as lambda grows the candidate
    leaves the positivity domain and turns into a pseudometric.

    Parameters
    ----------
    n : int
        Dimension, at least 2 (an off-diagonal must exist).
    lam : float
        Off-diagonal parameter.

    Returns
    -------
    MetricCandidate
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    lam = float(lam)
    band = BandSymmetricMatrix(
        dim=n,
        half_bandwidth=1,
        bands=((0.5,) + (1.0,) * (n - 1), (lam,) * (n - 1)),
    )
    return MetricCandidate(
        matrix=band, params={"lambda": lam}, source=MetricSource.CLOSED_FORM
    )


def l_matrix(n, lam, mu):
    """The two-parameter pentadiagonal candidate L(lambda, mu).

    First off-diagonal lambda, second off-diagonal mu, diagonal
    (1/2, 1 + mu, 1, ..., 1, 1 - mu): the only irregular diagonal entries
    sit at positions (1, 1), (2, 2) and (N, N).  L(lambda, 0) reduces to
    K(lambda).

    Parameters
    ----------
    n : int
        Dimension, at least 3 (a second off-diagonal must exist).
    lam, mu : float
        Band parameters.

    Returns
    -------
    MetricCandidate
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    lam = float(lam)
    mu = float(mu)
    diag = (0.5, 1.0 + mu) + (1.0,) * (n - 3) + (1.0 - mu,)
    band = BandSymmetricMatrix(
        dim=n,
        half_bandwidth=2,
        bands=(diag, (lam,) * (n - 1), (mu,) * (n - 2)),
    )
    return MetricCandidate(
        matrix=band,
        params={"lambda": lam, "mu": mu},
        source=MetricSource.CLOSED_FORM,
    )


def band_metric_basis(h, b, tol=1e-10):
    """All symmetric band solutions of the intertwining equation.

    Treats each free band entry of a symmetric matrix with half-bandwidth
    ``b`` as an unknown, assembles the linear map X -> H^T X - X H over the
    (b+1)N - b(b+1)/2 unknowns, and returns an orthonormal basis of its
    kernel.  For the first-kind well the kernel has dimension b + 1: the
    diagonal solution, the K direction, the L direction, and so on.

    Each basis element is rescaled so its trailing diagonal entry is 1
    when that entry is non-negligible, otherwise so its largest entry is 1;
    this matches the normalization of the printed closed forms.

    Parameters
    ----------
    h : ChainHamiltonian
        Any chain, not only the well models.
    b : int
        Half-bandwidth of the ansatz, 0 <= b <= N - 1.
    tol : float
        Relative singular-value cutoff for the kernel extraction.

    Returns
    -------
    list of MetricCandidate
        Solver-basis candidates ordered by descending singular value.

    Raises
    ------
    ValueError
        If the kernel is empty (impossible for the well models, meaningful
        for general chains).
    """
    if not isinstance(h, ChainHamiltonian):
        raise ValueError(f"expected a ChainHamiltonian, got {type(h).__name__}")
    n = h.dim
    if not 0 <= b <= n - 1:
        raise ValueError(f"half-bandwidth must lie in [0, {n - 1}], got {b}")
    dense = h.to_dense()
    unknowns = [(j, i) for j in range(b + 1) for i in range(n - j)]
    system = np.empty((n * n, len(unknowns)))
    for col, (j, i) in enumerate(unknowns):
        e = np.zeros((n, n))
        e[i, i + j] = 1.0
        e[i + j, i] = 1.0
        system[:, col] = (dense.T @ e - e @ dense).ravel()
    kernel = null_space(system, tol=tol)
    if kernel.shape[1] == 0:
        raise ValueError(
            f"no symmetric band solution with half-bandwidth {b} for this chain"
        )
    out = []
    for idx in range(kernel.shape[1]):
        bands = [np.zeros(n - j) for j in range(b + 1)]
        for (j, i), v in zip(unknowns, kernel[:, idx]):
            bands[j][i] = v
        trailing = bands[0][n - 1]
        peak = max(np.max(np.abs(band)) for band in bands)
        if abs(trailing) > 1e-8 * peak:
            scaled = [band / trailing for band in bands]
        else:
            flat = np.concatenate(bands)
            lead = flat[np.argmax(np.abs(flat))]
            scaled = [band / lead for band in bands]
        band_m = BandSymmetricMatrix(
            dim=n, half_bandwidth=b, bands=tuple(tuple(v) for v in scaled)
        )
        out.append(
            MetricCandidate(
                matrix=band_m,
                params={"basis_index": float(idx)},
                source=MetricSource.SOLVER_BASIS,
            )
        )
    return out


def s_inner_product(theta, a, b):
    """The metric-weighted bilinear form a^T Theta b.

    When Theta is positive definite this is the physical inner product that
    makes the first-kind well self-adjoint; eigenvectors for distinct
    levels are orthogonal under it.

    Parameters
    ----------
    theta : MetricCandidate, BandSymmetricMatrix or ndarray
        The weight matrix.
    a, b : sequence of float
        Vectors of matching dimension.

    Returns
    -------
    float
    """
    dense = _dense_theta(theta)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != (dense.shape[0],) or b.shape != (dense.shape[0],):
        raise ValueError(
            f"vector shapes {a.shape}, {b.shape} do not match metric dimension "
            f"{dense.shape[0]}"
        )
    return float(a @ dense @ b)


@dataclass(frozen=True)
class HermitizeReport:
    """Outcome of checking a candidate against its Hamiltonian.

    Attributes
    ----------
    intertwining_residual : float
        ||H^T Theta - Theta H||_max.
    symmetry_defect : float
        ||Theta H - (Theta H)^T||_max; zero exactly when H is self-adjoint
        under the candidate's bilinear form.
    min_eigenvalue : float
        Smallest eigenvalue of Theta; positive for a true metric.
    scale : float
        ||H||_max * ||Theta||_max, the natural size of the residuals.
    """

    intertwining_residual: float
    symmetry_defect: float
    min_eigenvalue: float
    scale: float

    def passed(self, tol=1e-10):
        """Whether the intertwining residual is below tol * scale."""
        return self.intertwining_residual <= tol * max(1.0, self.scale)


def hermitize_check(h, theta):
    """Measure how well a candidate Hermitizes a chain Hamiltonian.

    Parameters
    ----------
    h : ChainHamiltonian
    theta : MetricCandidate, BandSymmetricMatrix or ndarray

    Returns
    -------
    HermitizeReport
    """
    dense_h = h.to_dense()
    dense_t = _dense_theta(theta)
    if dense_t.shape[0] != h.dim:
        raise ValueError(
            f"dimension mismatch: matrix {h.dim}, metric {dense_t.shape[0]}"
        )
    residual = float(np.max(np.abs(dense_h.T @ dense_t - dense_t @ dense_h)))
    th = dense_t @ dense_h
    sym_defect = float(np.max(np.abs(th - th.T)))
    min_eig = float(sym_eigs(0.5 * (dense_t + dense_t.T)).values[0])
    scale = float(np.max(np.abs(dense_h)) * np.max(np.abs(dense_t)))
    return HermitizeReport(
        intertwining_residual=residual,
        symmetry_defect=sym_defect,
        min_eigenvalue=min_eig,
        scale=scale,
    )
