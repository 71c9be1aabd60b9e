"""Discrete square-well chain Hamiltonians and their closed-form solutions.

Two N-site models are built here.  The second-kind well is the ordinary
hopping chain (zero diagonal, unit off-diagonals); it is Hermitian and its
eigenvectors are Chebyshev polynomials of the second kind evaluated at the
lattice momenta.  The first-kind well differs in a single entry, a 2 in the
(1, 2) position, which destroys Hermiticity while keeping the spectrum real:
energies become 2 cos((n + 1/2) pi / N) and the right eigenvectors collect
first-kind Chebyshev values.  Left eigenvectors coincide with the right ones
except for a halved first component, which is what makes the whole metric
construction downstream tractable.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .chebpoly import PolyKind, cheb_eval, cheb_zeros

__all__ = [
    "ChainHamiltonian",
    "EigenSystem",
    "ModelKind",
    "ResidualReport",
    "build_hamiltonian",
    "closed_form_eigensystem",
    "closed_form_energies",
    "verify_eigensystem",
]


class ModelKind(enum.Enum):
    """Which square-well chain: the Hermitian or the non-Hermitian one."""

    SECOND_KIND_WELL = "second-kind"
    FIRST_KIND_WELL = "first-kind"


def _poly_kind(kind):
    if kind is ModelKind.FIRST_KIND_WELL:
        return PolyKind.FIRST_KIND
    if kind is ModelKind.SECOND_KIND_WELL:
        return PolyKind.SECOND_KIND
    raise ValueError(f"kind must be a ModelKind, got {kind!r}")


@dataclass(frozen=True)
class ChainHamiltonian:
    """Tridiagonal chain matrix stored by its three diagonals.

    Attributes
    ----------
    dim : int
        Number of sites N.
    diag : tuple of float
        Main diagonal, length N.
    sub : tuple of float
        Subdiagonal entries H[i+1, i], length N - 1.
    sup : tuple of float
        Superdiagonal entries H[i, i+1], length N - 1.
    """

    dim: int
    diag: tuple
    sub: tuple
    sup: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        for name, seq, want in (
            ("diag", self.diag, self.dim),
            ("sub", self.sub, self.dim - 1),
            ("sup", self.sup, self.dim - 1),
        ):
            seq = tuple(float(v) for v in seq)
            if len(seq) != want:
                raise ValueError(f"{name} must have length {want}, got {len(seq)}")
            object.__setattr__(self, name, seq)

    def to_dense(self):
        """Dense N x N realization."""
        h = np.diag(np.array(self.diag))
        if self.dim > 1:
            idx = np.arange(self.dim - 1)
            h[idx + 1, idx] = self.sub
            h[idx, idx + 1] = self.sup
        return h

    def symmetrized(self):
        """Diagonal similarity transform onto a symmetric matrix.

        Finds positive scalings d with (diag(d) H diag(d)^-1) symmetric,
        which exists whenever paired off-diagonal entries have the same
        sign.  The transformed matrix shares the spectrum of H, so a
        symmetric eigensolver applied to it provides an independent check
        of the closed-form energies.

        Returns
        -------
        (ndarray, ndarray)
            The symmetric matrix S and the scaling vector d, with
            S = diag(d) H diag(d)^-1 and off-diagonal entries
            sqrt(sub_i * sup_i).

        Raises
        ------
        ValueError
            If some sub/sup pair has strictly opposite signs (no real
            diagonal similarity can symmetrize the chain).
        """
        d = np.ones(self.dim)
        for i in range(self.dim - 1):
            lo, up = self.sub[i], self.sup[i]
            if lo == 0.0 and up == 0.0:
                d[i + 1] = d[i]
            elif lo * up > 0.0:
                d[i + 1] = d[i] * np.sqrt(up / lo)
            else:
                raise ValueError(
                    f"chain not symmetrizable: sub[{i}]*sup[{i}] = {lo * up}"
                )
        s = d[:, None] * self.to_dense() / d[None, :]
        s = 0.5 * (s + s.T)
        return s, d


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Paired right/left eigenvectors with their shared real energies.

    Attributes
    ----------
    dim : int
        Number of sites N.
    energies : ndarray
        Strictly decreasing eigenvalues E_n, length N.
    right_vectors : ndarray
        Right eigenvectors (kets), one per column, aligned with energies.
    left_vectors : ndarray
        Left eigenvectors (eigenvectors of the transpose), one per column.

    Vectors are stored unnormalized, exactly as the closed forms produce
    them, so structural statements such as "the left vector is the right
    vector with a halved first component" stay literally testable.
    """

    dim: int
    energies: np.ndarray
    right_vectors: np.ndarray
    left_vectors: np.ndarray


def build_hamiltonian(kind, n):
    """Construct the N-site chain matrix of the requested model.

    Both models have zero diagonal and unit off-diagonals; the first-kind
    well overrides the (1, 2) entry to 2 (vacuous at N = 1).

    Parameters
    ----------
    kind : ModelKind
        Which well.
    n : int
        Number of sites, at least 1.

    Returns
    -------
    ChainHamiltonian
    """
    _poly_kind(kind)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    sup = [1.0] * (n - 1)
    if kind is ModelKind.FIRST_KIND_WELL and n >= 2:
        sup[0] = 2.0
    return ChainHamiltonian(
        dim=n, diag=(0.0,) * n, sub=(1.0,) * (n - 1), sup=tuple(sup)
    )


def closed_form_energies(kind, n):
    """Exact energies, descending.

    The spectra are twice the Chebyshev zeros of degree N: the first-kind
    well gives 2 cos((k + 1/2) pi / N) and the second-kind well gives
    2 cos((k + 1) pi / (N + 1)), k = 0..N-1.

    Parameters
    ----------
    kind : ModelKind
        Which well.
    n : int
        Number of sites, at least 1.

    Returns
    -------
    ndarray
        Length N, strictly decreasing.
    """
    poly = _poly_kind(kind)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return 2.0 * cheb_zeros(poly, n)


def closed_form_eigensystem(kind, n):
    """Exact eigensystem of the chain.

    With x_k = E_k / 2 ranging over the degree-N Chebyshev zeros, the
    right eigenvector for level k has site components p(0, x_k) ..
    p(N-1, x_k) where p is T for the first-kind well and U for the
    second-kind well.  First-kind left eigenvectors repeat the right ones
    with the leading component halved to 1/2; the second-kind model is
    Hermitian, so left and right coincide.

    Parameters
    ----------
    kind : ModelKind
        Which well.
    n : int
        Number of sites, at least 1.

    Returns
    -------
    EigenSystem
    """
    poly = _poly_kind(kind)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    x = cheb_zeros(poly, n)
    right = np.empty((n, n))
    for alpha in range(n):
        right[alpha, :] = cheb_eval(poly, alpha, x)
    if kind is ModelKind.FIRST_KIND_WELL:
        left = right.copy()
        left[0, :] *= 0.5
    else:
        left = right.copy()
    return EigenSystem(
        dim=n, energies=2.0 * x, right_vectors=right, left_vectors=left
    )


@dataclass(frozen=True)
class ResidualReport:
    """Max-absolute-entry defects of an eigensystem against its matrix.

    Attributes
    ----------
    right_residual : float
        max over levels of ||H r_n - E_n r_n||_max.
    left_residual : float
        Same for the transpose problem.
    biorthogonality_defect : float
        Largest |left_m . right_n| over m != n.
    completeness_defect : float
        ||I - sum_n right_n left_n^T / (left_n . right_n)||_max.
    """

    right_residual: float
    left_residual: float
    biorthogonality_defect: float
    completeness_defect: float

    @property
    def max_defect(self):
        return max(
            self.right_residual,
            self.left_residual,
            self.biorthogonality_defect,
            self.completeness_defect,
        )


def verify_eigensystem(h, es):
    """Check an eigensystem against its Hamiltonian.

    Computes the four defects of `ResidualReport`.  The binorms
    left_n . right_n are guarded: a vanishing binorm would mean the pair
    cannot resolve the identity (an exceptional point), which the well
    models never produce, so it is treated as an input error.

    Parameters
    ----------
    h : ChainHamiltonian
    es : EigenSystem

    Returns
    -------
    ResidualReport

    Raises
    ------
    ValueError
        On dimension mismatch or a vanishing binorm.
    """
    if h.dim != es.dim:
        raise ValueError(f"dimension mismatch: matrix {h.dim}, system {es.dim}")
    dense = h.to_dense()
    r = es.right_vectors
    l = es.left_vectors
    e = es.energies
    right_res = float(np.max(np.abs(dense @ r - r * e[None, :])))
    left_res = float(np.max(np.abs(dense.T @ l - l * e[None, :])))
    gram = l.T @ r
    binorms = np.diagonal(gram).copy()
    scale = np.linalg.norm(l, axis=0) * np.linalg.norm(r, axis=0)
    bad = np.abs(binorms) <= 1e-12 * np.maximum(scale, 1.0)
    if np.any(bad):
        raise ValueError(
            f"vanishing binorm at level(s) {np.nonzero(bad)[0].tolist()}"
        )
    off = gram - np.diag(binorms)
    bio_defect = float(np.max(np.abs(off))) if es.dim > 1 else 0.0
    ident = (r / binorms[None, :]) @ l.T
    comp_defect = float(np.max(np.abs(ident - np.eye(es.dim))))
    return ResidualReport(
        right_residual=right_res,
        left_residual=left_res,
        biorthogonality_defect=bio_defect,
        completeness_defect=comp_defect,
    )
