import numpy as np
import pytest

from chebwell.bandmat import BandSymmetricMatrix
from chebwell.lattice import ModelKind, build_hamiltonian, closed_form_eigensystem
from chebwell.metrics import (
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


def test_spectral_metric_unit_weights_small_case():
    es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, 2)
    theta = spectral_metric(es).to_dense()
    assert np.allclose(theta, np.diag([0.5, 1.0]), rtol=0, atol=1e-15)


def test_spectral_metric_unit_weights_scale_the_diagonal_candidate():
    for n in (2, 4, 6, 9):
        es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
        theta = spectral_metric(es).to_dense()
        expected = (n / 2.0) * diagonal_metric(n).to_dense()
        assert np.max(np.abs(theta - expected)) < 1e-12 * n


def test_spectral_metric_random_weights_hermitize_and_stay_positive():
    rng = np.random.default_rng(21)
    for n in (1, 2, 3, 5, 8):
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
        for _ in range(50):
            nu = rng.uniform(0.2, 2.0, size=n) * rng.choice((-1.0, 1.0), size=n)
            cand = spectral_metric(es, nu)
            assert cand.source is MetricSource.SPECTRAL
            rep = hermitize_check(ham, cand)
            assert rep.intertwining_residual < 1e-11 * max(1.0, rep.scale)
            assert rep.min_eigenvalue > 0.0
            assert rep.passed()


def test_spectral_metric_rejects_zero_or_mismatched_weights():
    es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, 3)
    with pytest.raises(ValueError):
        spectral_metric(es, [1.0, 0.0, 1.0])
    with pytest.raises(ValueError):
        spectral_metric(es, [1.0, 1.0])


def test_diagonal_metric_entries():
    d = diagonal_metric(5).to_dense()
    assert np.array_equal(d, np.diag([0.5, 1.0, 1.0, 1.0, 1.0]))
    assert diagonal_metric(1).to_dense()[0, 0] == 0.5


def test_tridiagonal_family_interpolates_the_diagonal_one():
    for n in (2, 3, 6, 10):
        assert np.array_equal(
            k_matrix(n, 0.0).to_dense(), diagonal_metric(n).to_dense()
        )


def test_pentadiagonal_family_interpolates_the_tridiagonal_one():
    for n in (3, 4, 8):
        for lam in (0.0, 0.3, -0.7):
            assert np.array_equal(
                l_matrix(n, lam, 0.0).to_dense(), k_matrix(n, lam).to_dense()
            )


def test_tridiagonal_family_intertwines_exactly():
    rng = np.random.default_rng(22)
    for n in (2, 3, 6, 17, 30):
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        hd = ham.to_dense()
        for lam in rng.uniform(-3.0, 3.0, size=8):
            theta = k_matrix(n, float(lam)).to_dense()
            defect = hd.T @ theta - theta @ hd
            assert np.max(np.abs(defect)) < 1e-13 * max(1.0, abs(lam))


def test_pentadiagonal_family_intertwines_exactly():
    rng = np.random.default_rng(23)
    for n in (3, 4, 5, 8, 17, 30):
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        hd = ham.to_dense()
        for _ in range(8):
            lam = float(rng.uniform(-3.0, 3.0))
            mu = float(rng.uniform(-3.0, 3.0))
            theta = l_matrix(n, lam, mu).to_dense()
            defect = hd.T @ theta - theta @ hd
            assert np.max(np.abs(defect)) < 1e-13 * max(1.0, abs(lam), abs(mu))


def test_family_band_structure_and_params():
    k = k_matrix(6, 0.4)
    assert k.matrix.half_bandwidth == 1
    assert k.params == {"lambda": 0.4}
    assert k.source is MetricSource.CLOSED_FORM
    ell = l_matrix(6, 0.4, 0.2)
    assert ell.matrix.half_bandwidth == 2
    assert ell.params == {"lambda": 0.4, "mu": 0.2}
    dense = ell.to_dense()
    assert dense[1, 1] == 1.2
    assert dense[5, 5] == 0.8


def test_family_size_validation():
    with pytest.raises(ValueError):
        k_matrix(1, 0.1)
    with pytest.raises(ValueError):
        l_matrix(2, 0.1, 0.1)


def test_band_basis_has_expected_dimension_and_intertwines():
    for n in range(4, 11):
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        hd = ham.to_dense()
        for b in (0, 1, 2):
            basis = band_metric_basis(ham, b)
            assert len(basis) == b + 1
            for cand in basis:
                assert cand.source is MetricSource.SOLVER_BASIS
                assert cand.matrix.half_bandwidth <= b
                theta = cand.to_dense()
                assert np.array_equal(theta, theta.T)
                assert np.max(np.abs(hd.T @ theta - theta @ hd)) < 1e-12


def test_band_basis_normalization_pins_the_corner_entry():
    ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, 6)
    for b in (0, 1, 2):
        for cand in band_metric_basis(ham, b):
            dense = cand.to_dense()
            corner = dense[-1, -1]
            if abs(corner) > 1e-8 * np.max(np.abs(dense)):
                assert corner == pytest.approx(1.0, abs=1e-12)
            else:
                assert np.max(np.abs(dense)) == pytest.approx(1.0, abs=1e-12)


def test_closed_forms_lie_in_the_solver_span():
    for n in (4, 6, 9):
        ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        targets = {
            0: diagonal_metric(n),
            1: k_matrix(n, 0.37),
            2: l_matrix(n, 0.37, 0.29),
        }
        for b, target in targets.items():
            basis = band_metric_basis(ham, b)
            cols = np.stack([c.to_dense().ravel() for c in basis], axis=1)
            vec = target.to_dense().ravel()
            coeffs, *_ = np.linalg.lstsq(cols, vec, rcond=None)
            assert np.max(np.abs(cols @ coeffs - vec)) < 1e-10


def test_band_basis_empty_kernel_is_an_error():
    ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, 5)
    with pytest.raises(ValueError):
        band_metric_basis(ham, 0, tol=1e-300)


def test_s_inner_product_diagonalizes_on_eigenvectors():
    n = 5
    es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
    nu = np.array([1.0, -0.5, 2.0, 0.7, 1.3])
    theta = spectral_metric(es, nu)
    binorms = np.array(
        [es.left_vectors[:, k] @ es.right_vectors[:, k] for k in range(n)]
    )
    for j in range(n):
        for k in range(n):
            got = s_inner_product(theta, es.right_vectors[:, j], es.right_vectors[:, k])
            want = (nu[k] * binorms[k]) ** 2 if j == k else 0.0
            assert abs(got - want) < 1e-10


def test_hermitize_check_flags_a_non_metric():
    ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, 4)
    bogus = np.diag([1.0, 2.0, 3.0, 4.0])
    rep = hermitize_check(ham, bogus)
    assert rep.intertwining_residual > 0.1
    assert not rep.passed()


def test_hermitize_check_accepts_plain_arrays_and_band_matrices():
    ham = build_hamiltonian(ModelKind.FIRST_KIND_WELL, 4)
    cand = k_matrix(4, 0.2)
    r1 = hermitize_check(ham, cand)
    r2 = hermitize_check(ham, cand.matrix)
    r3 = hermitize_check(ham, cand.to_dense())
    assert r1.intertwining_residual == r2.intertwining_residual == r3.intertwining_residual
    assert r1.min_eigenvalue == pytest.approx(r3.min_eigenvalue, abs=1e-12)


def test_metric_candidate_wraps_both_matrix_representations():
    band = BandSymmetricMatrix.from_dense(np.diag([0.5, 1.0]))
    cand = MetricCandidate(matrix=band, params={}, source=MetricSource.CLOSED_FORM)
    assert cand.dim == 2
    assert np.array_equal(cand.to_dense(), np.diag([0.5, 1.0]))
    dense = MetricCandidate(matrix=np.eye(3), source=MetricSource.SPECTRAL)
    assert dense.dim == 3
    assert dense.params == {}
    assert np.array_equal(dense.to_dense(), np.eye(3))
