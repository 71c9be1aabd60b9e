"""Acceptance suite: 13 criteria, one test and one printed line each.

Shared expensive artifacts (the 200 x 200 scan and the bisected horizon
boundaries) are computed once per module and reused; the determinism
criterion recomputes them from scratch and compares serialized bytes.
"""

import math
import time

import numpy as np
import pytest

from chebwell import serialize
from chebwell.analysis import (
    SignatureLabel,
    asymptotic_slopes,
    boundary_linearity_test,
    classify,
    compare_horizon_formulas,
    horizon_roots_1d,
    region_summary,
    scan_2d,
    small_lambda_slopes,
)
from chebwell.chebpoly import PolyKind, cheb_zeros
from chebwell.lattice import (
    ModelKind,
    build_hamiltonian,
    closed_form_eigensystem,
    closed_form_energies,
    verify_eigensystem,
)
from chebwell.metrics import (
    band_metric_basis,
    diagonal_metric,
    hermitize_check,
    k_matrix,
    l_matrix,
    spectral_metric,
)
from chebwell.numerics import sym_eigs

K6_THRESHOLDS = (0.5176380902, 0.7071067812, 1.9318516526)


def _line(name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"{status} {name}{suffix}")
    assert ok, f"{name}{suffix}"


@pytest.fixture(scope="module")
def k6_boundary():
    return horizon_roots_1d(6, "k", 0.0, 2.5, tol=1e-12)


@pytest.fixture(scope="module")
def l8_boundary():
    return horizon_roots_1d(8, "l", 0.0, 1.5, tol=1e-12, lam=0.0)


@pytest.fixture(scope="module")
def scan200():
    return scan_2d(8, (-1.0, 1.0), (-1.5, 1.5), 200)


def test_c01_closed_form_spectra_match_numerical_eigensolve():
    start = time.perf_counter()
    worst = 0.0
    for kind in ModelKind:
        for n in range(1, 201):
            closed = closed_form_energies(kind, n)
            s, _ = build_hamiltonian(kind, n).symmetrized()
            numeric = sym_eigs(s).values[::-1]
            worst = max(worst, float(np.max(np.abs(closed - numeric))))
    elapsed = time.perf_counter() - start
    _line(
        "c01 closed-form spectra, both models, N = 1..200",
        worst < 1e-10 and elapsed < 10.0,
        f"max |delta| = {worst:.3e}, {elapsed:.1f} s",
    )


def test_c02_biorthogonal_completeness_up_to_n_40():
    worst = 0.0
    for n in range(2, 41):
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
        worst = max(worst, verify_eigensystem(ham, es).max_defect)
    _line(
        "c02 biorthogonal completeness, N = 2..40",
        worst < 1e-10,
        f"max defect = {worst:.3e}",
    )


def test_c03_left_vectors_equal_right_with_halved_first_component():
    exact = True
    worst = 0.0
    for n in range(1, 41):
        es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
        halved = es.right_vectors.copy()
        halved[0, :] *= 0.5
        exact = exact and bool(np.array_equal(halved, es.left_vectors))
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        rep = verify_eigensystem(ham, es)
        worst = max(worst, rep.right_residual, rep.left_residual)
    _line(
        "c03 ketket structure of the left eigenvectors",
        exact and worst < 1e-12,
        f"exact = {exact}, max residual = {worst:.3e}",
    )


def test_c04_spectral_metric_is_positive_and_intertwines():
    rng = np.random.default_rng(20260815)
    worst_rel = 0.0
    least = float("inf")
    for n in range(1, 13):
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
        for _ in range(50):
            nu = rng.uniform(0.2, 2.0, size=n) * rng.choice((-1.0, 1.0), size=n)
            rep = hermitize_check(ham, spectral_metric(es, nu))
            worst_rel = max(worst_rel, rep.intertwining_residual / max(1.0, rep.scale))
            least = min(least, rep.min_eigenvalue)
    _line(
        "c04 spectral metric, 50 random weight draws per N <= 12",
        worst_rel < 1e-10 and least > 0.0,
        f"max relative residual = {worst_rel:.3e}, min eigenvalue = {least:.3e}",
    )


def test_c05_three_positivity_thresholds_at_n_6(k6_boundary):
    points = k6_boundary.points
    dev = (
        max(abs(p - e) for p, e in zip(points, K6_THRESHOLDS))
        if len(points) == 3
        else math.inf
    )
    labels = [classify(k_matrix(6, v)).label for v in (0.1, 0.6, 2.0)]
    wanted = [
        SignatureLabel.METRIC,
        SignatureLabel.PONTRYAGIN_ONE_MINUS,
        SignatureLabel.KREIN_BALANCED,
    ]
    _line(
        "c05 horizon thresholds and signature labels at N = 6",
        dev < 1e-8 and labels == wanted,
        f"max |delta| = {dev:.3e}, labels = {[l.value for l in labels]}",
    )


def test_c06_first_threshold_doubles_the_smallest_positive_zero(k6_boundary):
    zero = float(cheb_zeros(PolyKind.FIRST_KIND, 6)[2])
    dev = abs(k6_boundary.points[0] - 2.0 * zero)
    _line(
        "c06 first threshold = 2 x smallest positive degree-6 zero",
        dev < 1e-10,
        f"|delta| = {dev:.3e}",
    )


def test_c07_large_coupling_slopes():
    got = asymptotic_slopes(6, 1e6)
    closed = np.sort(2.0 * cheb_zeros(PolyKind.SECOND_KIND, 6))
    literals = np.sort(
        [1.801937736, 1.246979604, 0.4450418679,
         -1.801937736, -1.246979604, -0.4450418679]
    )
    dev = max(
        float(np.max(np.abs(got - closed))),
        float(np.max(np.abs(got - literals))),
    )
    _line(
        "c07 asymptotic slopes at coupling 1e6",
        dev < 1e-5,
        f"max |delta| = {dev:.3e}",
    )


def test_c08_small_coupling_star_and_exact_half():
    rep = small_lambda_slopes(6)
    want = np.sort([0.0, 1.0, -1.0, math.sqrt(3.0), -math.sqrt(3.0)])
    dev = float(np.max(np.abs(np.sort(rep.star_slopes) - want)))
    _line(
        "c08 small-coupling slope star at N = 6",
        dev < 1e-4 and rep.lowest_eigenvalue == 0.5,
        f"max |delta| = {dev:.3e}, lowest eigenvalue = {rep.lowest_eigenvalue!r}",
    )


def test_c09_pentadiagonal_degeneracy_locations(l8_boundary):
    want = (math.sqrt(1.0 - math.sqrt(0.5)), math.sqrt(1.0 + math.sqrt(0.5)))
    points = l8_boundary.points
    dev = (
        max(abs(p - e) for p, e in zip(points, want))
        if len(points) == 2
        else math.inf
    )
    _line(
        "c09 degeneracy crossings at N = 8",
        dev < 1e-8,
        f"max |delta| = {dev:.3e}, points = {len(points)}",
    )


def test_c10_band_basis_dimensions_and_span_fits():
    dims_ok = True
    worst_fit = 0.0
    for n in range(4, 11):
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        for b in (0, 1, 2):
            basis = band_metric_basis(ham, b)
            dims_ok = dims_ok and len(basis) == b + 1
            if b == 0:
                target = diagonal_metric(n)
            elif b == 1:
                target = k_matrix(n, 0.37)
            else:
                target = l_matrix(n, 0.37, 0.29)
            cols = np.stack([c.to_dense().ravel() for c in basis], axis=1)
            vec = target.to_dense().ravel()
            coeffs, *_ = np.linalg.lstsq(cols, vec, rcond=None)
            worst_fit = max(worst_fit, float(np.max(np.abs(cols @ coeffs - vec))))
    _line(
        "c10 band-basis dimensions b+1 and closed-form span fits",
        dims_ok and worst_fit < 1e-10,
        f"dims ok = {dims_ok}, max fit residual = {worst_fit:.3e}",
    )


def test_c11_horizon_formula_adjudication_is_recorded():
    rep = compare_horizon_formulas(3)
    boundary_ok = abs(rep.boundary - K6_THRESHOLDS[0]) < 1e-8
    recorded = rep.cos_fraction_deviation > 0.0 and rep.doubled_zero_deviation >= 0.0
    _line(
        "c11 competing threshold formulas adjudicated at N = 6",
        boundary_ok and recorded,
        f"boundary = {rep.boundary:.10f}, cos-fraction deviation = "
        f"{rep.cos_fraction_deviation:.3f} (matches: {rep.cos_fraction_matches}), "
        f"doubled-zero matches: {rep.doubled_zero_matches}",
    )


def test_c12_positivity_region_of_the_two_parameter_family(scan200):
    region = region_summary(scan200)
    mismatches = scan200.reflection_mismatches()
    report = boundary_linearity_test(scan200)
    ok = (
        region.contains_origin
        and region.n_components == 1
        and len(mismatches) == 0
        and report.passed
    )
    _line(
        "c12 connected symmetric positivity region with straight edges",
        ok,
        f"{region.n_cells} cells, {region.n_components} component(s), "
        f"{len(mismatches)} mirror mismatches, max deviation "
        f"{report.max_deviation:.2e} vs tolerance {report.segment_tol:.2e}",
    )


def test_c13_repeat_runs_are_byte_identical(k6_boundary, l8_boundary, scan200):
    first = (
        serialize.json_text(k6_boundary),
        serialize.json_text(l8_boundary),
        serialize.csv_text(*serialize.scan_table(scan200)),
    )
    second = (
        serialize.json_text(horizon_roots_1d(6, "k", 0.0, 2.5, tol=1e-12)),
        serialize.json_text(horizon_roots_1d(8, "l", 0.0, 1.5, tol=1e-12, lam=0.0)),
        serialize.csv_text(
            *serialize.scan_table(scan_2d(8, (-1.0, 1.0), (-1.5, 1.5), 200))
        ),
    )
    identical = sum(1 for a, b in zip(first, second) if a == b)
    _line(
        "c13 byte-identical repeat runs for thresholds, degeneracies, scan",
        identical == 3,
        f"{identical}/3 artifacts identical",
    )
