"""One-shot verification suite.

Every quantitative claim the package is built around is re-derived here
from scratch and compared against its independent oracle: closed-form
spectra against dense eigensolves, bisected positivity boundaries against
the printed thresholds, solver-basis dimensions against the brute-force
null space, and the 2-D domain scan against its symmetry, connectivity and
straight-boundary properties.  The CLI's verify subcommand serializes the
resulting report and maps overall failure to exit code 1.

Functions from sibling modules are resolved late (module attribute lookup
at call time), so a deliberately corrupted constructor is caught by the
matching named check instead of slipping past a stale reference.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, analysis, lattice, metrics, numerics, serialize
from .chebpoly import PolyKind, cheb_zeros
from .lattice import ModelKind

__all__ = ["VerificationCheck", "VerificationReport", "run_verification"]

K6_THRESHOLDS = (0.5176380902, 0.7071067812, 1.9318516526)
ASYMPTOTIC_SLOPES_6 = (0.4450418679, 1.246979604, 1.801937736)


@dataclass(frozen=True)
class VerificationCheck:
    """A single named check with its measured value and threshold."""

    name: str
    passed: bool
    measured: float
    threshold: float
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate outcome of the verification suite."""

    all_passed: bool
    max_n: object
    scan_steps: int
    kernel_backend: str
    checks: tuple


def run_verification(max_n=None, scan_steps=None):
    """Run every check, optionally at reduced sizes.

    Parameters
    ----------
    max_n : int, optional
        Cap on the matrix sizes exercised; None runs the full default
        sizes (spectra to N = 200, scan grid 200 x 200).  Must be at
        least 4 when given.
    scan_steps : int, optional
        Override for the 2-D scan grid; defaults to 200 (full) or 60
        (when max_n is given).

    Returns
    -------
    VerificationReport
    """
    if max_n is not None and max_n < 4:
        raise ValueError(f"max_n must be at least 4, got {max_n}")
    spectra_max = 200 if max_n is None else max_n
    comp_max = 40 if max_n is None else min(40, max_n)
    spectral_max = 12 if max_n is None else min(12, max_n)
    basis_max = 10 if max_n is None else min(10, max_n)
    if scan_steps is None:
        scan_steps = 200 if max_n is None else 60
    if scan_steps < 2:
        raise ValueError(f"scan_steps must be at least 2, got {scan_steps}")

    cache = {}

    def k6_boundary():
        if "k6" not in cache:
            cache["k6"] = analysis.horizon_roots_1d(6, "k", 0.0, 2.5, tol=1e-12)
        return cache["k6"]

    def l8_boundary():
        if "l8" not in cache:
            cache["l8"] = analysis.horizon_roots_1d(
                8, "l", 0.0, 1.5, tol=1e-12, lam=0.0
            )
        return cache["l8"]

    def domain_scan_cached():
        if "scan" not in cache:
            cache["scan"] = analysis.scan_2d(
                8, (-1.0, 1.0), (-1.5, 1.5), scan_steps
            )
        return cache["scan"]

    def check_spectra():
        worst = 0.0
        for kind in (ModelKind.FIRST_KIND_WELL, ModelKind.SECOND_KIND_WELL):
            for n in range(1, spectra_max + 1):
                closed = lattice.closed_form_energies(kind, n)
                s, _ = lattice.build_hamiltonian(kind, n).symmetrized()
                numeric = numerics.sym_eigs(s).values[::-1]
                worst = max(worst, float(np.max(np.abs(closed - numeric))))
        return worst, 1e-10, worst < 1e-10, f"both models, N up to {spectra_max}"

    def check_completeness():
        worst = 0.0
        for n in range(2, comp_max + 1):
            ham = lattice.build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
            es = lattice.closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
            worst = max(worst, lattice.verify_eigensystem(ham, es).max_defect)
        return worst, 1e-10, worst < 1e-10, f"first-kind well, N up to {comp_max}"

    def check_ketket():
        worst = 0.0
        exact = True
        for n in range(1, comp_max + 1):
            es = lattice.closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
            halved = es.right_vectors.copy()
            halved[0, :] *= 0.5
            exact = exact and bool(np.array_equal(halved, es.left_vectors))
            ham = lattice.build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
            rep = lattice.verify_eigensystem(ham, es)
            worst = max(worst, rep.right_residual, rep.left_residual)
        passed = exact and worst < 1e-12
        return worst, 1e-12, passed, "left vectors equal right vectors with halved first component"

    def check_spectral():
        rng = np.random.default_rng(20260815)
        worst_rel = 0.0
        least = float("inf")
        for n in range(1, spectral_max + 1):
            ham = lattice.build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
            es = lattice.closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
            for _ in range(50):
                nu = rng.uniform(0.2, 2.0, size=n) * rng.choice((-1.0, 1.0), size=n)
                rep = metrics.hermitize_check(ham, metrics.spectral_metric(es, nu))
                worst_rel = max(
                    worst_rel, rep.intertwining_residual / max(1.0, rep.scale)
                )
                least = min(least, rep.min_eigenvalue)
        passed = worst_rel < 1e-10 and least > 0.0
        detail = f"smallest eigenvalue {least:.3e} over 50 draws per N <= {spectral_max}"
        return worst_rel, 1e-10, passed, detail

    def check_intertwining():
        ham6 = lattice.build_hamiltonian(ModelKind.FIRST_KIND_WELL, 6)
        ham8 = lattice.build_hamiltonian(ModelKind.FIRST_KIND_WELL, 8)
        pairs = (
            (ham6, metrics.diagonal_metric(6)),
            (ham6, metrics.k_matrix(6, 0.3)),
            (ham8, metrics.l_matrix(8, 0.2, 0.1)),
        )
        worst = 0.0
        for ham, theta in pairs:
            worst = max(worst, metrics.hermitize_check(ham, theta).intertwining_residual)
        return worst, 1e-12, worst < 1e-12, "diagonal and K at N=6, L at N=8"

    def check_horizon_thresholds():
        boundary = k6_boundary()
        count_ok = len(boundary.points) == len(K6_THRESHOLDS)
        dev = (
            max(abs(p - e) for p, e in zip(boundary.points, K6_THRESHOLDS))
            if count_ok
            else 1.0
        )
        labels = [
            analysis.classify(metrics.k_matrix(6, v)).label for v in (0.1, 0.6, 2.0)
        ]
        wanted = [
            analysis.SignatureLabel.METRIC,
            analysis.SignatureLabel.PONTRYAGIN_ONE_MINUS,
            analysis.SignatureLabel.KREIN_BALANCED,
        ]
        passed = count_ok and dev <= 1e-8 and labels == wanted
        detail = (
            "roots "
            + ", ".join(serialize.format_float(p) for p in boundary.points)
            + "; labels "
            + ", ".join(label.value for label in labels)
        )
        return dev, 1e-8, passed, detail

    def check_first_threshold():
        boundary = k6_boundary()
        zero = float(cheb_zeros(PolyKind.FIRST_KIND, 6)[2])
        dev = abs(boundary.points[0] - 2.0 * zero)
        detail = f"doubled smallest positive zero = {serialize.format_float(2.0 * zero)}"
        return dev, 1e-10, dev <= 1e-10, detail

    def check_slopes():
        got = analysis.asymptotic_slopes(6, 1e6)
        closed = np.sort(2.0 * cheb_zeros(PolyKind.SECOND_KIND, 6))
        literals = np.sort(
            [s for v in ASYMPTOTIC_SLOPES_6 for s in (v, -v)]
        )
        dev = max(
            float(np.max(np.abs(got - closed))),
            float(np.max(np.abs(got - literals))),
        )
        return dev, 1e-5, dev < 1e-5, "probe value 1e6"

    def check_star():
        rep = analysis.small_lambda_slopes(6)
        expected = np.sort([0.0, 1.0, -1.0, math.sqrt(3.0), -math.sqrt(3.0)])
        dev = float(np.max(np.abs(np.sort(rep.star_slopes) - expected)))
        exact_half = rep.lowest_eigenvalue == 0.5
        detail = f"lowest eigenvalue at zero = {rep.lowest_eigenvalue!r}"
        return dev, 1e-4, dev < 1e-4 and exact_half, detail

    def check_degeneracies():
        boundary = l8_boundary()
        expected = (
            math.sqrt(1.0 - math.sqrt(0.5)),
            math.sqrt(1.0 + math.sqrt(0.5)),
        )
        count_ok = len(boundary.points) == 2
        dev = (
            max(abs(p - e) for p, e in zip(boundary.points, expected))
            if count_ok
            else 1.0
        )
        detail = (
            "mu roots "
            + ", ".join(serialize.format_float(p) for p in boundary.points)
            + f"; inertia steps {list(boundary.inertia_steps)}"
        )
        return dev, 1e-8, count_ok and dev <= 1e-8, detail

    def check_basis_dims():
        worst_fit = 0.0
        dims_ok = True
        for n in range(4, basis_max + 1):
            ham = lattice.build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
            for b in (0, 1, 2):
                basis = metrics.band_metric_basis(ham, b)
                dims_ok = dims_ok and len(basis) == b + 1
                if b == 0:
                    target = metrics.diagonal_metric(n)
                elif b == 1:
                    target = metrics.k_matrix(n, 0.37)
                else:
                    target = metrics.l_matrix(n, 0.37, 0.29)
                cols = np.stack([c.to_dense().ravel() for c in basis], axis=1)
                vec = target.to_dense().ravel()
                coeffs, *_ = np.linalg.lstsq(cols, vec, rcond=None)
                worst_fit = max(worst_fit, float(np.max(np.abs(cols @ coeffs - vec))))
        passed = dims_ok and worst_fit < 1e-10
        return worst_fit, 1e-10, passed, f"b in 0..2, N in 4..{basis_max}"

    def check_adjudication():
        rep = analysis.compare_horizon_formulas(3)
        dev = abs(rep.boundary - K6_THRESHOLDS[0])
        detail = (
            f"boundary {serialize.format_float(rep.boundary)}; "
            f"cos-fraction deviation {serialize.format_float(rep.cos_fraction_deviation)}"
            f" (matches: {rep.cos_fraction_matches}); doubled-zero deviation "
            f"{serialize.format_float(rep.doubled_zero_deviation)}"
            f" (matches: {rep.doubled_zero_matches})"
        )
        return dev, 1e-8, dev <= 1e-8, detail

    def check_domain_scan():
        scan = domain_scan_cached()
        region = analysis.region_summary(scan)
        mismatches = scan.reflection_mismatches()
        lin = analysis.boundary_linearity_test(scan)
        passed = (
            region.contains_origin
            and region.n_components == 1
            and len(mismatches) == 0
            and lin.passed
        )
        detail = (
            f"{region.n_cells} positive cells in {region.n_components} component(s); "
            f"{len(mismatches)} reflection mismatches; {lin.n_corners} corners; "
            f"max deviation {serialize.format_float(lin.max_deviation)} "
            f"with cell size {serialize.format_float(lin.cell_size)}"
        )
        return lin.max_deviation, lin.segment_tol, passed, detail

    def check_determinism():
        first = (
            serialize.json_text(k6_boundary()),
            serialize.json_text(l8_boundary()),
            serialize.csv_text(*serialize.scan_table(domain_scan_cached())),
        )
        second = (
            serialize.json_text(analysis.horizon_roots_1d(6, "k", 0.0, 2.5, tol=1e-12)),
            serialize.json_text(
                analysis.horizon_roots_1d(8, "l", 0.0, 1.5, tol=1e-12, lam=0.0)
            ),
            serialize.csv_text(
                *serialize.scan_table(
                    analysis.scan_2d(8, (-1.0, 1.0), (-1.5, 1.5), scan_steps)
                )
            ),
        )
        n_diff = sum(1 for a, b in zip(first, second) if a != b)
        detail = "horizon roots, degeneracy roots and full scan re-computed"
        return float(n_diff), 0.5, n_diff == 0, detail

    plan = (
        ("closed_form_spectra", check_spectra),
        ("biorthogonal_completeness", check_completeness),
        ("ketket_structure", check_ketket),
        ("spectral_metric_positivity", check_spectral),
        ("closed_form_intertwining", check_intertwining),
        ("horizon_thresholds_n6", check_horizon_thresholds),
        ("first_threshold_identity", check_first_threshold),
        ("asymptotic_slopes", check_slopes),
        ("small_lambda_star", check_star),
        ("pentadiagonal_degeneracies", check_degeneracies),
        ("band_basis_dimensions", check_basis_dims),
        ("horizon_formula_adjudication", check_adjudication),
        ("positivity_domain_scan", check_domain_scan),
        ("deterministic_outputs", check_determinism),
    )
    checks = []
    for name, fn in plan:
        try:
            measured, threshold, passed, detail = fn()
        except Exception as exc:
            checks.append(
                VerificationCheck(
                    name=name,
                    passed=False,
                    measured=-1.0,
                    threshold=-1.0,
                    detail=f"error: {exc}",
                )
            )
            continue
        checks.append(
            VerificationCheck(
                name=name,
                passed=bool(passed),
                measured=float(measured),
                threshold=float(threshold),
                detail=str(detail),
            )
        )
    return VerificationReport(
        all_passed=all(c.passed for c in checks),
        max_n=max_n,
        scan_steps=int(scan_steps),
        kernel_backend=_kernels.BACKEND,
        checks=tuple(checks),
    )
