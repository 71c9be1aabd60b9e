import math

import numpy as np
import pytest

from chebwell.chebpoly import PolyKind, cheb_eval, cheb_zeros
from chebwell.lattice import (
    ChainHamiltonian,
    ModelKind,
    build_hamiltonian,
    closed_form_eigensystem,
    closed_form_energies,
    verify_eigensystem,
)
from chebwell.numerics import sym_eigs


def test_chain_structure():
    h = build_hamiltonian(ModelKind.FIRST_KIND_WELL, 5)
    dense = h.to_dense()
    assert np.all(np.diagonal(dense) == 0.0)
    assert dense[0, 1] == 2.0
    assert np.all(np.diagonal(dense, 1)[1:] == 1.0)
    assert np.all(np.diagonal(dense, -1) == 1.0)
    u = build_hamiltonian(ModelKind.SECOND_KIND_WELL, 5).to_dense()
    assert np.array_equal(u, u.T)
    assert u[0, 1] == 1.0


def test_closed_form_energies_are_doubled_zeros():
    for kind, poly in (
        (ModelKind.FIRST_KIND_WELL, PolyKind.FIRST_KIND),
        (ModelKind.SECOND_KIND_WELL, PolyKind.SECOND_KIND),
    ):
        for n in (1, 2, 3, 7, 20):
            e = closed_form_energies(kind, n)
            assert np.array_equal(e, 2.0 * cheb_zeros(poly, n))
            assert np.all(np.diff(e) < 0)


def test_energies_pair_up_and_zero_energy_only_for_odd_sizes():
    for n in range(1, 30):
        e = closed_form_energies(ModelKind.FIRST_KIND_WELL, n)
        assert np.max(np.abs(e + e[::-1])) < 1e-14
        smallest = np.min(np.abs(e))
        if n % 2:
            assert smallest < 1e-14
        else:
            assert smallest > 0.1


def test_energies_match_symmetric_similarity_eigensolve():
    for kind in ModelKind:
        for n in list(range(1, 41)) + [101]:
            e = closed_form_energies(kind, n)
            s, d = build_hamiltonian(kind, n).symmetrized()
            assert d[0] == 1.0
            numeric = sym_eigs(s).values[::-1]
            assert np.max(np.abs(e - numeric)) < 1e-12


def test_energies_match_nonsymmetric_eigensolve():
    for n in (2, 5, 9, 16):
        e = np.sort(closed_form_energies(ModelKind.FIRST_KIND_WELL, n))
        raw = np.linalg.eigvals(build_hamiltonian(ModelKind.FIRST_KIND_WELL, n).to_dense())
        assert np.max(np.abs(np.imag(raw))) < 1e-8
        assert np.max(np.abs(np.sort(np.real(raw)) - e)) < 1e-8


def test_symmetrized_first_kind_off_diagonal():
    s, d = build_hamiltonian(ModelKind.FIRST_KIND_WELL, 4).symmetrized()
    assert np.array_equal(s, s.T)
    assert s[0, 1] == pytest.approx(math.sqrt(2.0), abs=1e-15)
    assert np.allclose(np.diagonal(s, 1)[1:], 1.0, rtol=0, atol=1e-15)


def test_symmetrized_rejects_sign_mismatched_chain():
    h = ChainHamiltonian(dim=2, diag=(0.0, 0.0), sub=(1.0,), sup=(-1.0,))
    with pytest.raises(ValueError):
        h.symmetrized()


def test_right_vectors_are_first_kind_polynomials_at_the_zeros():
    n = 6
    es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
    x = cheb_zeros(PolyKind.FIRST_KIND, n)
    for alpha in range(n):
        row = cheb_eval(PolyKind.FIRST_KIND, alpha, x)
        assert np.array_equal(es.right_vectors[alpha, :], row)


def test_left_vectors_halve_the_first_component_exactly():
    for n in range(1, 30):
        es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
        halved = es.right_vectors.copy()
        halved[0, :] *= 0.5
        assert np.array_equal(halved, es.left_vectors)


def test_eigensystem_residuals_small_up_to_n_40():
    for n in range(2, 41):
        h = build_hamiltonian(ModelKind.FIRST_KIND_WELL, n)
        es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, n)
        rep = verify_eigensystem(h, es)
        assert rep.right_residual < 1e-11
        assert rep.left_residual < 1e-11
        assert rep.biorthogonality_defect < 1e-11
        assert rep.completeness_defect < 1e-11
        assert rep.max_defect == max(
            rep.right_residual,
            rep.left_residual,
            rep.biorthogonality_defect,
            rep.completeness_defect,
        )


def test_second_kind_eigensystem_is_consistent_too():
    for n in (2, 5, 11):
        h = build_hamiltonian(ModelKind.SECOND_KIND_WELL, n)
        es = closed_form_eigensystem(ModelKind.SECOND_KIND_WELL, n)
        rep = verify_eigensystem(h, es)
        assert rep.max_defect < 1e-11


def test_verify_rejects_collapsed_binorm():
    import dataclasses

    h = build_hamiltonian(ModelKind.FIRST_KIND_WELL, 2)
    es = closed_form_eigensystem(ModelKind.FIRST_KIND_WELL, 2)
    swapped = dataclasses.replace(es, left_vectors=es.left_vectors[:, ::-1].copy())
    with pytest.raises(ValueError):
        verify_eigensystem(h, swapped)


def test_invalid_sizes_raise():
    with pytest.raises(ValueError):
        build_hamiltonian(ModelKind.FIRST_KIND_WELL, 0)
    with pytest.raises(ValueError):
        closed_form_energies(ModelKind.FIRST_KIND_WELL, -3)
