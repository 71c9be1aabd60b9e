"""Pure-Python band-matrix kernels.

These are the fallback twins of the compiled routines in ``_band.pyx``.  Both
implementations perform the same floating-point operations in the same order,
so the two backends return bit-identical results; the test suite asserts
this.  Any change here must be mirrored in the Cython file.

All kernels take the matrix as flattened lower band storage of length
``(b + 1) * n`` with ``ab[j * n + i] = A[i + j, i]``; entries past the end of
each diagonal are ignored but must be present.
"""

__all__ = ["count_below", "eig_bounds", "min_eig"]

_TINY = 2.2250738585072014e-308


def count_below(ab, n, b, sigma, pivmin):
    """Number of eigenvalues of A that are below sigma.

    Counts negative pivots of the LDL^T elimination of A - sigma*I.  Pivots
    inside (-pivmin, pivmin) are clamped to -pivmin, so an eigenvalue lying
    exactly at sigma is counted as below it.
    """
    w = [float(v) for v in ab]
    for k in range(n):
        w[k] -= sigma
    count = 0
    for k in range(n):
        piv = w[k]
        if -pivmin < piv < pivmin:
            piv = -pivmin
        if piv < 0.0:
            count += 1
        jmax = b if b < n - 1 - k else n - 1 - k
        for j in range(1, jmax + 1):
            f = w[j * n + k] / piv
            for i in range(j, jmax + 1):
                w[(i - j) * n + (k + j)] -= f * w[i * n + k]
    return count


def eig_bounds(ab, n, b):
    """Gershgorin bounds (lo, hi) enclosing the whole spectrum."""
    lo = 0.0
    hi = 0.0
    for i in range(n):
        r = 0.0
        jmax = b if b < n - 1 - i else n - 1 - i
        for j in range(1, jmax + 1):
            v = ab[j * n + i]
            r += v if v >= 0.0 else -v
        jmax = b if b < i else i
        for j in range(1, jmax + 1):
            v = ab[j * n + (i - j)]
            r += v if v >= 0.0 else -v
        d = ab[i]
        dlo = d - r
        dhi = d + r
        if i == 0:
            lo = dlo
            hi = dhi
        else:
            if dlo < lo:
                lo = dlo
            if dhi > hi:
                hi = dhi
    return lo, hi


def min_eig(ab, n, b, tol_abs, tol_rel):
    """Smallest eigenvalue by bisection on the count_below predicate.

    The bracket [lo, hi] starts at the Gershgorin bounds and shrinks until
    its width drops under ``tol_abs + tol_rel * max(|lo|, |hi|)`` or the
    midpoint can no longer move in double precision; the midpoint of the
    final bracket is returned.
    """
    lo, hi = eig_bounds(ab, n, b)
    alo = -lo if lo < 0.0 else lo
    ahi = -hi if hi < 0.0 else hi
    mx = alo if alo > ahi else ahi
    if mx < 1.0:
        mx = 1.0
    pivmin = _TINY * mx * mx
    while True:
        alo = -lo if lo < 0.0 else lo
        ahi = -hi if hi < 0.0 else hi
        mx = alo if alo > ahi else ahi
        if hi - lo <= tol_abs + tol_rel * mx:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if count_below(ab, n, b, mid, pivmin) >= 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
