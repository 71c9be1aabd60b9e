"""Chebyshev polynomials of the first and second kind.

Both families satisfy the recurrence p_{k+1}(x) = 2 x p_k(x) - p_{k-1}(x) and
differ only in the degree-one seed, so a single evaluator covers them.  The
closed-form zeros are the lattice momenta of the well models, which is the
only reason this module exists instead of calling a polynomial library: the
evaluation order here is fixed and reproducible, and the zeros are emitted in
the descending order the eigensolvers expect.
"""

import enum
import math

import numpy as np

__all__ = ["PolyKind", "cheb_eval", "cheb_zeros"]


class PolyKind(enum.Enum):
    """Which Chebyshev family: T (first kind) or U (second kind)."""

    FIRST_KIND = "T"
    SECOND_KIND = "U"


def cheb_eval(kind, degree, x):
    """Evaluate T_n(x) or U_n(x) by the three-term recurrence.

    Parameters
    ----------
    kind : PolyKind
        Polynomial family.
    degree : int
        Non-negative degree n.
    x : float or ndarray
        Evaluation point(s).

    Returns
    -------
    float or ndarray
        Value(s) of the polynomial, same shape as ``x``.
    """
    if not isinstance(kind, PolyKind):
        raise ValueError(f"kind must be a PolyKind, got {kind!r}")
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if degree == 0:
        return prev if prev.ndim else float(prev)
    cur = x.copy() if kind is PolyKind.FIRST_KIND else 2.0 * x
    for _ in range(degree - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur if cur.ndim else float(cur)


def cheb_zeros(kind, degree):
    """Zeros of T_n or U_n in descending order.

    T_n vanishes at cos((2k-1)pi/(2n)) and U_n at cos(k pi/(n+1)), k = 1..n.
    Both sets are returned largest first so they line up with the energy
    ordering used by the chain models.

    Parameters
    ----------
    kind : PolyKind
        Polynomial family.
    degree : int
        Positive degree n.

    Returns
    -------
    ndarray
        Shape (n,), strictly decreasing, all values in (-1, 1).
    """
    if not isinstance(kind, PolyKind):
        raise ValueError(f"kind must be a PolyKind, got {kind!r}")
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    k = np.arange(1, degree + 1, dtype=float)
    if kind is PolyKind.FIRST_KIND:
        angles = (2.0 * k - 1.0) * math.pi / (2.0 * degree)
    else:
        angles = k * math.pi / (degree + 1.0)
    return np.cos(angles)
