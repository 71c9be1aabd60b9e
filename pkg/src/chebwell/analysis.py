"""Parameter-space exploration of the metric candidates.

The questions answered here are geometric.  For which parameter values does
a band candidate stay positive definite, where does it cross into
pseudometric territory, and what shape does the positivity domain have?
One-dimensional sweeps record full spectra on uniform grids; crossings are
located by bisection on inertia counts, which is robust to eigenvalue-branch
crossings; the two-parameter pentadiagonal domain is scanned on a grid, its
boundary is extracted by sub-grid bisection along grid edges, and the
boundary is tested for the straight-line structure the factorizable
determinant suggests.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .chebpoly import PolyKind, cheb_zeros
from .metrics import _dense_theta, k_matrix, l_matrix
from .numerics import count_eigs_below, min_eig_banded, sym_eigs

__all__ = [
    "BoundaryLinearityReport",
    "BoundarySegment",
    "DomainBoundary",
    "HorizonFormulaReport",
    "RegionSummary",
    "Scan2D",
    "ScanRecord",
    "SignatureLabel",
    "SignatureReport",
    "SmallLambdaStar",
    "Sweep1D",
    "SweepRecord",
    "asymptotic_slopes",
    "boundary_linearity_test",
    "classify",
    "compare_horizon_formulas",
    "extract_boundary_2d",
    "horizon_roots_1d",
    "region_summary",
    "scan_2d",
    "small_lambda_slopes",
    "sweep_1d",
]


def _zero_threshold(scale):
    """Inertia zero threshold: 1e-9 scaled by the matrix magnitude."""
    return 1e-9 * max(1.0, scale)


class SignatureLabel(enum.Enum):
    """Classification of a symmetric candidate by its inertia."""

    METRIC = "metric"
    PONTRYAGIN_ONE_MINUS = "pontryagin-one-minus"
    KREIN_BALANCED = "krein-balanced"
    INDEFINITE = "indefinite"
    SINGULAR = "singular"


@dataclass(frozen=True)
class SignatureReport:
    """Inertia counts of a candidate plus its classification.

    Counts use the zero threshold ``tau``: eigenvalues within tau of zero
    count as zero, below -tau as negative, above +tau as positive.  Labels
    are assigned with the precedence Singular (any zero), Metric (none
    negative), KreinBalanced (positives equal negatives), then
    PontryaginOneMinus (exactly one negative), else Indefinite.
    """

    n_positive: int
    n_negative: int
    n_zero: int
    min_abs_eigenvalue: float
    label: SignatureLabel
    tau: float


def classify(theta, tau=None):
    """Signature classification of a symmetric metric candidate.

    Parameters
    ----------
    theta : MetricCandidate, BandSymmetricMatrix or ndarray
        The candidate to classify.
    tau : float, optional
        Zero threshold; defaults to 1e-9 * max(1, largest entry).

    Returns
    -------
    SignatureReport
    """
    dense = _dense_theta(theta)
    if tau is None:
        tau = _zero_threshold(float(np.max(np.abs(dense))) if dense.size else 0.0)
    eigs = sym_eigs(dense).values
    n_zero = int(np.sum(np.abs(eigs) <= tau))
    n_negative = int(np.sum(eigs < -tau))
    n_positive = eigs.size - n_zero - n_negative
    if n_zero > 0:
        label = SignatureLabel.SINGULAR
    elif n_negative == 0:
        label = SignatureLabel.METRIC
    elif n_positive == n_negative:
        label = SignatureLabel.KREIN_BALANCED
    elif n_negative == 1:
        label = SignatureLabel.PONTRYAGIN_ONE_MINUS
    else:
        label = SignatureLabel.INDEFINITE
    return SignatureReport(
        n_positive=n_positive,
        n_negative=n_negative,
        n_zero=n_zero,
        min_abs_eigenvalue=float(np.min(np.abs(eigs))),
        label=label,
        tau=float(tau),
    )


def _family_candidate(n, family, value, lam):
    """Build the swept candidate: K(value), or L(lam, value) for family l."""
    if family == "k":
        return k_matrix(n, value)
    if family == "l":
        return l_matrix(n, lam, value)
    raise ValueError(f"family must be 'k' or 'l', got {family!r}")


@dataclass(frozen=True)
class SweepRecord:
    """One grid point of a 1-D sweep: parameter value and full spectrum."""

    value: float
    eigenvalues: tuple


@dataclass(frozen=True)
class Sweep1D:
    """A 1-D eigenvalue sweep of a band family.

    ``param_name`` is "lambda" for the tridiagonal family and "mu" for the
    pentadiagonal family swept at fixed lambda (recorded in ``fixed``).
    """

    dim: int
    family: str
    param_name: str
    fixed: dict
    records: tuple

    @property
    def grid(self):
        return tuple(r.value for r in self.records)


def sweep_1d(n, family, lo, hi, steps, lam=0.0):
    """Record full spectra of a band family on a uniform parameter grid.

    Parameters
    ----------
    n : int
        Dimension.
    family : str
        "k" sweeps K(lambda); "l" sweeps L(lam, mu) over mu at fixed lam.
    lo, hi : float
        Inclusive parameter range, lo < hi.
    steps : int
        Number of grid points, at least 2.
    lam : float, optional
        Fixed first off-diagonal for the "l" family; ignored for "k".

    Returns
    -------
    Sweep1D
    """
    family = str(family).lower()
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    if not lo < hi:
        raise ValueError(f"range must satisfy lo < hi, got [{lo}, {hi}]")
    grid = np.linspace(float(lo), float(hi), int(steps))
    records = []
    for v in grid:
        cand = _family_candidate(n, family, float(v), lam)
        eigs = sym_eigs(cand.to_dense()).values
        records.append(
            SweepRecord(value=float(v), eigenvalues=tuple(float(e) for e in eigs))
        )
    fixed = {"lambda": float(lam)} if family == "l" else {}
    param_name = "mu" if family == "l" else "lambda"
    return Sweep1D(
        dim=n,
        family=family,
        param_name=param_name,
        fixed=fixed,
        records=tuple(records),
    )


@dataclass(frozen=True)
class DomainBoundary:
    """Positivity-domain boundary points of a band family.

    For 1-D searches ``points`` holds sorted parameter values where an
    eigenvalue crosses zero and ``inertia_steps`` pairs up the below-zero
    counts on each side of every crossing.  For 2-D extraction ``points``
    holds (lambda, mu) pairs chained in angular order around the region
    centroid and ``inertia_steps`` is empty.
    """

    dim: int
    family: str
    half_bandwidth: int
    points: tuple
    inertia_steps: tuple
    fixed: dict
    grid_steps: int
    tol: float


def horizon_roots_1d(n, family, lo, hi, tol=1e-12, lam=0.0, refine_steps=400):
    """Locate every eigenvalue zero-crossing of a band family in a range.

    A refinement grid is scanned for changes of the inertia count (number
    of eigenvalues at or below zero); each change is bisected down to a
    bracket of width ``tol``.  Counting inertia rather than tracking
    eigenvalue branches makes simultaneous double crossings ordinary
    events: they show up as steps of 2.

    Parameters
    ----------
    n : int
        Dimension.
    family : str
        "k" or "l" (the latter swept in mu at fixed ``lam``).
    lo, hi : float
        Search range, lo < hi.
    tol : float
        Final bracket width, positive.
    lam : float, optional
        Fixed first off-diagonal for the "l" family.
    refine_steps : int, optional
        Number of grid intervals used to isolate crossings.

    Returns
    -------
    DomainBoundary

    Raises
    ------
    ValueError
        If no crossing lies in the range, or on invalid arguments.
    """
    family = str(family).lower()
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not lo < hi:
        raise ValueError(f"range must satisfy lo < hi, got [{lo}, {hi}]")
    if refine_steps < 2:
        raise ValueError(f"refine_steps must be at least 2, got {refine_steps}")

    def count_at(v):
        cand = _family_candidate(n, family, float(v), lam)
        return count_eigs_below(cand.matrix, 0.0)

    grid = np.linspace(float(lo), float(hi), int(refine_steps) + 1)
    counts = [count_at(v) for v in grid]
    points = []
    steps_info = []
    for i in range(len(grid) - 1):
        if counts[i] == counts[i + 1]:
            continue
        a, b = float(grid[i]), float(grid[i + 1])
        ca = counts[i]
        while b - a > tol:
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            if count_at(mid) == ca:
                a = mid
            else:
                b = mid
        points.append(0.5 * (a + b))
        steps_info.append((counts[i], counts[i + 1]))
    if not points:
        raise ValueError(
            f"no eigenvalue crossings of the {family} family in [{lo}, {hi}]"
        )
    fixed = {"lambda": float(lam)} if family == "l" else {}
    half_bw = 2 if family == "l" else 1
    return DomainBoundary(
        dim=n,
        family=family,
        half_bandwidth=half_bw,
        points=tuple(points),
        inertia_steps=tuple(steps_info),
        fixed=fixed,
        grid_steps=int(refine_steps),
        tol=float(tol),
    )


@dataclass(frozen=True)
class HorizonFormulaReport:
    """Adjudication of two closed-form guesses for a positivity boundary.

    ``boundary`` is the numerically bisected first positive crossing of
    K(lambda) at N = 2p.  The two closed-form candidates are
    cos(p pi / (2p + 1)) (``cos_fraction``) and twice the smallest positive
    zero of the degree-2p first-kind polynomial, 2 cos((2p-1) pi / (4p))
    (``doubled_zero``).  Each is reported with its absolute deviation and
    whether it matches within 1e-8; the numbers are recorded as measured,
    with no interpretation chosen.
    """

    p: int
    dim: int
    boundary: float
    cos_fraction_value: float
    cos_fraction_deviation: float
    cos_fraction_matches: bool
    doubled_zero_value: float
    doubled_zero_deviation: float
    doubled_zero_matches: bool


def compare_horizon_formulas(p):
    """Measure the K-family positivity boundary at N = 2p against both
    closed-form candidates.

    Parameters
    ----------
    p : int
        Half-dimension, at least 2.

    Returns
    -------
    HorizonFormulaReport
    """
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    n = 2 * p
    boundary = horizon_roots_1d(n, "k", 0.0, 2.5, tol=1e-12).points[0]
    cos_fraction = math.cos(p * math.pi / (2 * p + 1))
    zeros = cheb_zeros(PolyKind.FIRST_KIND, n)
    doubled_zero = 2.0 * float(zeros[p - 1])
    dev_fraction = abs(boundary - cos_fraction)
    dev_zero = abs(boundary - doubled_zero)
    return HorizonFormulaReport(
        p=int(p),
        dim=n,
        boundary=float(boundary),
        cos_fraction_value=cos_fraction,
        cos_fraction_deviation=dev_fraction,
        cos_fraction_matches=bool(dev_fraction <= 1e-8),
        doubled_zero_value=doubled_zero,
        doubled_zero_deviation=dev_zero,
        doubled_zero_matches=bool(dev_zero <= 1e-8),
    )


def asymptotic_slopes(n, lambda_probe=1e6):
    """Large-parameter eigenvalue slopes of the tridiagonal family.

    Returns the eigenvalues of K(lambda_probe) divided by lambda_probe,
    ascending.  For large probes these converge (error O(1/lambda)) to the
    spectrum of the zero-diagonal unit tridiagonal matrix, i.e. to twice
    the second-kind Chebyshev zeros of degree N.

    Parameters
    ----------
    n : int
        Dimension, at least 2.
    lambda_probe : float, optional
        Probe value, at least 1e4 so the linear regime dominates.

    Returns
    -------
    ndarray
        N slopes, ascending.
    """
    if lambda_probe < 1e4:
        raise ValueError(
            f"lambda_probe must be at least 1e4, got {lambda_probe}"
        )
    dense = k_matrix(n, float(lambda_probe)).to_dense()
    return sym_eigs(dense).values / float(lambda_probe)


@dataclass(frozen=True)
class SmallLambdaStar:
    """Leading-order eigenvalue slopes of K(lambda) near lambda = 0 at N=6.

    ``star_slopes`` holds the five slopes of the eigenvalue cluster that
    starts at the quintuply degenerate value 1; they form the left-right
    symmetric star {0, +-1, +-sqrt(3)}.  The remaining lowest eigenvalue
    starts at exactly 1/2 and is flat to leading order.
    """

    star_slopes: tuple
    lowest_slope: float
    lowest_eigenvalue: float
    step: float


def small_lambda_slopes(n=6, step=1e-6):
    """Finite-difference eigenvalue slopes of K(lambda) at lambda = 0.

    Defined for the six-site family only, where the degenerate cluster at 1
    has the closed-form slope star {0, +-1, +-sqrt(3)}.

    Parameters
    ----------
    n : int
        Must be 6.
    step : float, optional
        Forward finite-difference step.

    Returns
    -------
    SmallLambdaStar
    """
    if n != 6:
        raise ValueError(
            f"the small-lambda slope star is specific to n = 6, got {n}"
        )
    if step <= 0.0:
        raise ValueError(f"step must be positive, got {step}")
    e0 = sym_eigs(k_matrix(n, 0.0).to_dense()).values
    eh = sym_eigs(k_matrix(n, float(step)).to_dense()).values
    slopes = (eh - e0) / float(step)
    return SmallLambdaStar(
        star_slopes=tuple(float(s) for s in slopes[1:]),
        lowest_slope=float(slopes[0]),
        lowest_eigenvalue=float(e0[0]),
        step=float(step),
    )


@dataclass(frozen=True)
class ScanRecord:
    """One cell of a 2-D scan of the pentadiagonal family."""

    lam: float
    mu: float
    n_negative: int
    min_eig: float


@dataclass(frozen=True)
class Scan2D:
    """Grid classification of L(lambda, mu).

    Records are stored row-major with lambda as the outer loop, so record
    ``i * len(mu_grid) + j`` belongs to ``(lam_grid[i], mu_grid[j])``.
    """

    dim: int
    lam_grid: tuple
    mu_grid: tuple
    records: tuple

    def record_at(self, i, j):
        return self.records[i * len(self.mu_grid) + j]

    def positive_mask(self):
        """Boolean grid of cells where the candidate is positive definite.

        A cell counts as positive when no eigenvalue is negative and the
        smallest eigenvalue clears the zero threshold.
        """
        mask = np.zeros((len(self.lam_grid), len(self.mu_grid)), dtype=bool)
        for i in range(len(self.lam_grid)):
            for j in range(len(self.mu_grid)):
                rec = self.record_at(i, j)
                band = l_matrix(self.dim, rec.lam, rec.mu).matrix
                tau = _zero_threshold(band.max_abs())
                mask[i, j] = rec.n_negative == 0 and rec.min_eig > tau
        return mask

    def reflection_mismatches(self):
        """Cells whose positivity disagrees with the lambda-mirrored cell.

        Meaningful when the lambda grid is symmetric about 0; an empty
        result is the numerical rendering of the lambda -> -lambda
        similarity of the family.
        """
        mask = self.positive_mask()
        diff = mask != mask[::-1, :]
        return tuple(zip(*np.nonzero(diff)))


def scan_2d(n, lam_range, mu_range, steps):
    """Classify L(lambda, mu) on a uniform 2-D grid.

    Parameters
    ----------
    n : int
        Dimension, at least 3.
    lam_range, mu_range : (float, float)
        Inclusive axis ranges, lo < hi.
    steps : int
        Grid points per axis, at least 2.

    Returns
    -------
    Scan2D
    """
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    for name, (lo, hi) in (("lam_range", lam_range), ("mu_range", mu_range)):
        if not lo < hi:
            raise ValueError(f"{name} must satisfy lo < hi, got [{lo}, {hi}]")
    lam_grid = np.linspace(float(lam_range[0]), float(lam_range[1]), int(steps))
    mu_grid = np.linspace(float(mu_range[0]), float(mu_range[1]), int(steps))
    records = []
    for lam in lam_grid:
        for mu in mu_grid:
            band = l_matrix(n, float(lam), float(mu)).matrix
            tau = _zero_threshold(band.max_abs())
            n_neg = count_eigs_below(band, -tau)
            records.append(
                ScanRecord(
                    lam=float(lam),
                    mu=float(mu),
                    n_negative=int(n_neg),
                    min_eig=float(min_eig_banded(band)),
                )
            )
    return Scan2D(
        dim=n,
        lam_grid=tuple(float(v) for v in lam_grid),
        mu_grid=tuple(float(v) for v in mu_grid),
        records=tuple(records),
    )


@dataclass(frozen=True)
class RegionSummary:
    """Size, connectivity, and origin membership of the positivity region."""

    n_cells: int
    n_components: int
    contains_origin: bool


def region_summary(scan):
    """Connected-component summary of a scan's positivity region.

    Components are counted with 4-neighbor connectivity; the origin test
    uses the grid cell nearest (0, 0).
    """
    mask = scan.positive_mask()
    ni, nj = mask.shape
    seen = np.zeros_like(mask)
    n_components = 0
    for si in range(ni):
        for sj in range(nj):
            if not mask[si, sj] or seen[si, sj]:
                continue
            n_components += 1
            stack = [(si, sj)]
            seen[si, sj] = True
            while stack:
                ci, cj = stack.pop()
                for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    ii, jj = ci + di, cj + dj
                    if 0 <= ii < ni and 0 <= jj < nj:
                        if mask[ii, jj] and not seen[ii, jj]:
                            seen[ii, jj] = True
                            stack.append((ii, jj))
    i0 = int(np.argmin(np.abs(np.asarray(scan.lam_grid))))
    j0 = int(np.argmin(np.abs(np.asarray(scan.mu_grid))))
    return RegionSummary(
        n_cells=int(np.sum(mask)),
        n_components=n_components,
        contains_origin=bool(mask[i0, j0]),
    )


def _default_evaluator(dim):
    def evaluator(lam, mu):
        return min_eig_banded(l_matrix(dim, lam, mu).matrix)

    return evaluator


def _edge_bisect(evaluator, p_in, p_out, tol):
    """Boundary point on the segment from an inside to an outside node."""
    ax, ay = p_in
    bx, by = p_out
    while max(abs(bx - ax), abs(by - ay)) > tol:
        mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
        if (mx, my) == (ax, ay) or (mx, my) == (bx, by):
            break
        if evaluator(mx, my) > 0.0:
            ax, ay = mx, my
        else:
            bx, by = mx, my
    return 0.5 * (ax + bx), 0.5 * (ay + by)


def extract_boundary_2d(scan, bisect_tol=1e-9, evaluator=None):
    """Extract the positivity boundary of a 2-D scan.

    Every grid edge whose endpoints lie on opposite sides of the region is
    bisected on the sign of the smallest eigenvalue to locate the crossing.
    The resulting points are chained in angular order around their centroid.

    Parameters
    ----------
    scan : Scan2D
        Grid classification to trace.
    bisect_tol : float, optional
        Bisection bracket width in parameter units.
    evaluator : callable, optional
        Signed membership function f(lambda, mu), positive inside.  The
        scanned family's smallest eigenvalue by default; tests substitute
        synthetic shapes here.

    Returns
    -------
    DomainBoundary
        With (lambda, mu) point pairs.

    Raises
    ------
    ValueError
        If the scan has no boundary edges.
    """
    if evaluator is None:
        evaluator = _default_evaluator(scan.dim)
    mask = scan.positive_mask()
    lam = scan.lam_grid
    mu = scan.mu_grid
    points = []
    for i in range(len(lam)):
        for j in range(len(mu)):
            here = mask[i, j]
            if i + 1 < len(lam) and here != mask[i + 1, j]:
                a = (lam[i], mu[j])
                b = (lam[i + 1], mu[j])
                p_in, p_out = (a, b) if here else (b, a)
                points.append(_edge_bisect(evaluator, p_in, p_out, bisect_tol))
            if j + 1 < len(mu) and here != mask[i, j + 1]:
                a = (lam[i], mu[j])
                b = (lam[i], mu[j + 1])
                p_in, p_out = (a, b) if here else (b, a)
                points.append(_edge_bisect(evaluator, p_in, p_out, bisect_tol))
    if not points:
        raise ValueError("scan contains no positivity boundary edges")
    pts = np.array(points)
    center = pts.mean(axis=0)
    angles = np.arctan2(pts[:, 1] - center[1], pts[:, 0] - center[0])
    order = np.argsort(angles, kind="stable")
    chained = tuple((float(x), float(y)) for x, y in pts[order])
    return DomainBoundary(
        dim=scan.dim,
        family="l",
        half_bandwidth=2,
        points=chained,
        inertia_steps=(),
        fixed={},
        grid_steps=len(lam),
        tol=float(bisect_tol),
    )


@dataclass(frozen=True)
class BoundarySegment:
    """A maximal straight run of boundary points with its line fit."""

    n_points: int
    first_point: tuple
    last_point: tuple
    centroid: tuple
    direction: tuple
    max_deviation: float


@dataclass(frozen=True)
class BoundaryLinearityReport:
    """Outcome of testing a 2-D positivity boundary for straight edges.

    The boundary chain is split at corners (turning angles above an
    adaptive threshold), a total-least-squares line is fitted to each
    segment, and the largest perpendicular deviation is compared against
    ``segment_tol``.  A boundary with no detectable corners is treated as
    one segment, which makes genuinely curved boundaries fail loudly
    instead of being subdivided into trivially straight pieces.
    """

    dim: int
    n_boundary_points: int
    n_corners: int
    corner_threshold_deg: float
    cell_size: float
    segment_tol: float
    max_deviation: float
    passed: bool
    segments: tuple


def _turning_angles_deg(pts):
    """Cyclic turning angle at every point of a closed chain, in degrees."""
    prev = np.roll(pts, 1, axis=0)
    nxt = np.roll(pts, -1, axis=0)
    u = pts - prev
    v = nxt - pts
    cross = u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
    dot = u[:, 0] * v[:, 0] + u[:, 1] * v[:, 1]
    return np.degrees(np.arctan2(cross, dot))


def _merge_adjacent_corners(corners, turning, m):
    """Collapse runs of cyclically consecutive corner indices.

    A sharp corner falling between two extraction points can flag both
    neighbors; keeping only the stronger of each run prevents degenerate
    two-point segments.
    """
    if not corners:
        return []
    corners = sorted(corners)
    runs = [[corners[0]]]
    for idx in corners[1:]:
        if idx == runs[-1][-1] + 1:
            runs[-1].append(idx)
        else:
            runs.append([idx])
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][-1] == m - 1:
        runs[0] = runs.pop() + runs[0]
    return [max(run, key=lambda i: abs(turning[i])) for run in runs]


def _fit_segment(pts_seg):
    center = pts_seg.mean(axis=0)
    centered = pts_seg - center
    cov = centered.T @ centered
    _, vecs = np.linalg.eigh(cov)
    direction = vecs[:, -1]
    normal = np.array([-direction[1], direction[0]])
    deviations = np.abs(centered @ normal)
    return BoundarySegment(
        n_points=len(pts_seg),
        first_point=(float(pts_seg[0, 0]), float(pts_seg[0, 1])),
        last_point=(float(pts_seg[-1, 0]), float(pts_seg[-1, 1])),
        centroid=(float(center[0]), float(center[1])),
        direction=(float(direction[0]), float(direction[1])),
        max_deviation=float(np.max(deviations)),
    )


def boundary_linearity_test(scan, segment_tol=None, evaluator=None):
    """Test whether a scan's positivity boundary is piecewise straight.

    Parameters
    ----------
    scan : Scan2D
        Grid classification containing inside and outside cells.
    segment_tol : float, optional
        Maximum allowed perpendicular deviation per segment; defaults to
        twice the grid cell size.
    evaluator : callable, optional
        Signed membership override, forwarded to the boundary extraction.

    Returns
    -------
    BoundaryLinearityReport

    Raises
    ------
    ValueError
        If fewer than 3 boundary points exist overall or in some segment.
    """
    cell = max(
        (scan.lam_grid[-1] - scan.lam_grid[0]) / (len(scan.lam_grid) - 1),
        (scan.mu_grid[-1] - scan.mu_grid[0]) / (len(scan.mu_grid) - 1),
    )
    if segment_tol is None:
        segment_tol = 2.0 * cell
    if segment_tol <= 0.0:
        raise ValueError(f"segment_tol must be positive, got {segment_tol}")
    boundary = extract_boundary_2d(scan, evaluator=evaluator)
    pts = np.array(boundary.points)
    m = len(pts)
    if m < 3:
        raise ValueError(f"insufficient boundary points for a line fit: {m}")
    turning = _turning_angles_deg(pts)
    threshold = max(8.0, 4.0 * float(np.median(np.abs(turning))))
    corners = [i for i in range(m) if abs(turning[i]) > threshold]
    corners = _merge_adjacent_corners(corners, turning, m)
    segments = []
    if len(corners) < 2:
        segments.append(_fit_segment(pts))
    else:
        for k in range(len(corners)):
            start = corners[k]
            end = corners[(k + 1) % len(corners)]
            if end > start:
                idx = list(range(start, end + 1))
            else:
                idx = list(range(start, m)) + list(range(0, end + 1))
            if len(idx) < 3:
                raise ValueError(
                    f"insufficient boundary points in a segment: {len(idx)}"
                )
            segments.append(_fit_segment(pts[idx]))
    max_dev = max(s.max_deviation for s in segments)
    return BoundaryLinearityReport(
        dim=scan.dim,
        n_boundary_points=m,
        n_corners=len(corners),
        corner_threshold_deg=float(threshold),
        cell_size=float(cell),
        segment_tol=float(segment_tol),
        max_deviation=float(max_dev),
        passed=bool(max_dev < segment_tol),
        segments=tuple(segments),
    )
