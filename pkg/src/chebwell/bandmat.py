"""Compact storage for real symmetric band matrices.

Every metric candidate in this package is a real symmetric matrix with a
small number of non-zero diagonals, so the positivity scans store only the
upper bands.  ``bands[j]`` holds the j-th superdiagonal: ``bands[j][i]``
equals ``A[i, i + j]``.  The main diagonal is ``bands[0]``.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["BandSymmetricMatrix"]


@dataclass(frozen=True)
class BandSymmetricMatrix:
    """Real symmetric matrix stored by its upper diagonals.

    Attributes
    ----------
    dim : int
        Matrix order N.
    half_bandwidth : int
        Number of non-zero superdiagonals b (0 for diagonal matrices).
    bands : tuple of tuple of float
        ``bands[j]`` has length ``dim - j`` and holds diagonal j.
    """

    dim: int
    half_bandwidth: int
    bands: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        if not 0 <= self.half_bandwidth < self.dim:
            raise ValueError(
                f"half_bandwidth must lie in [0, dim), got {self.half_bandwidth}"
            )
        if len(self.bands) != self.half_bandwidth + 1:
            raise ValueError(
                f"expected {self.half_bandwidth + 1} bands, got {len(self.bands)}"
            )
        frozen = []
        for j, band in enumerate(self.bands):
            band = tuple(float(v) for v in band)
            if len(band) != self.dim - j:
                raise ValueError(
                    f"band {j} must have length {self.dim - j}, got {len(band)}"
                )
            frozen.append(band)
        object.__setattr__(self, "bands", tuple(frozen))

    @classmethod
    def from_dense(cls, matrix, half_bandwidth=None, tol=0.0):
        """Extract band storage from a dense symmetric matrix.

        Parameters
        ----------
        matrix : ndarray
            Square symmetric array.
        half_bandwidth : int, optional
            Bands to keep.  Detected from the sparsity pattern when omitted.
        tol : float, optional
            Entries with absolute value at or below ``tol`` count as zero
            during bandwidth detection and the outside-band check.

        Raises
        ------
        ValueError
            If the matrix is not square symmetric, or if entries beyond the
            requested bandwidth exceed ``tol``.
        """
        a = np.asarray(matrix, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"matrix must be square, got shape {a.shape}")
        n = a.shape[0]
        if not np.array_equal(a, a.T):
            if np.max(np.abs(a - a.T)) > tol:
                raise ValueError("matrix is not symmetric")
        if half_bandwidth is None:
            half_bandwidth = 0
            for j in range(n - 1, 0, -1):
                if np.max(np.abs(np.diagonal(a, j))) > tol:
                    half_bandwidth = j
                    break
        else:
            for j in range(half_bandwidth + 1, n):
                if np.max(np.abs(np.diagonal(a, j))) > tol:
                    raise ValueError(
                        f"entries on diagonal {j} exceed half_bandwidth {half_bandwidth}"
                    )
        bands = tuple(tuple(np.diagonal(a, j)) for j in range(half_bandwidth + 1))
        return cls(dim=n, half_bandwidth=half_bandwidth, bands=bands)

    def to_dense(self):
        """Return the full symmetric matrix as an ndarray."""
        a = np.zeros((self.dim, self.dim))
        for j, band in enumerate(self.bands):
            idx = np.arange(self.dim - j)
            a[idx, idx + j] = band
            if j:
                a[idx + j, idx] = band
        return a

    def band_storage(self):
        """Lower band storage: column i holds A[i:i+b+1, i].

        Returns the (b+1, N) layout used by the factorization kernels,
        ``ab[j, i] = A[i + j, i]`` with unused tail entries zero.
        """
        ab = np.zeros((self.half_bandwidth + 1, self.dim))
        for j, band in enumerate(self.bands):
            ab[j, : self.dim - j] = band
        return ab

    def max_abs(self):
        """Largest absolute entry, used to scale pivot and zero thresholds."""
        return max(max(abs(v) for v in band) for band in self.bands)
