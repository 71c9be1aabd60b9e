import numpy as np
import pytest

from chebwell.bandmat import BandSymmetricMatrix


def _random_banded(rng, n, b):
    dense = np.zeros((n, n))
    for j in range(b + 1):
        v = rng.normal(size=n - j)
        dense += np.diag(v, -j)
        if j:
            dense += np.diag(v, j)
    return dense


def test_dense_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(50):
        n = int(rng.integers(1, 20))
        b = int(rng.integers(0, min(4, n)))
        dense = _random_banded(rng, n, b)
        m = BandSymmetricMatrix.from_dense(dense, half_bandwidth=b)
        assert m.dim == n
        assert m.half_bandwidth == b
        assert np.array_equal(m.to_dense(), dense)


def test_bandwidth_detection():
    dense = np.diag([1.0, 2.0, 3.0, 4.0])
    dense[0, 2] = dense[2, 0] = 0.5
    m = BandSymmetricMatrix.from_dense(dense)
    assert m.half_bandwidth == 2
    assert np.array_equal(m.to_dense(), dense)
    assert BandSymmetricMatrix.from_dense(np.diag([1.0, 2.0])).half_bandwidth == 0


def test_band_storage_layout():
    rng = np.random.default_rng(4)
    n, b = 7, 2
    dense = _random_banded(rng, n, b)
    m = BandSymmetricMatrix.from_dense(dense, half_bandwidth=b)
    ab = m.band_storage()
    assert ab.shape == (b + 1, n)
    for j in range(b + 1):
        for i in range(n - j):
            assert ab[j, i] == dense[i + j, i]
        assert np.all(ab[j, n - j:] == 0.0)


def test_max_abs():
    dense = np.array([[1.0, -7.0], [-7.0, 2.0]])
    m = BandSymmetricMatrix.from_dense(dense)
    assert m.max_abs() == 7.0


def test_rejects_asymmetric_and_bad_shapes():
    with pytest.raises(ValueError):
        BandSymmetricMatrix.from_dense(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        BandSymmetricMatrix.from_dense(np.ones((2, 3)))
    with pytest.raises(ValueError):
        BandSymmetricMatrix.from_dense(np.eye(3), half_bandwidth=3)


def test_truncation_outside_requested_band_is_rejected():
    dense = np.eye(4)
    dense[0, 3] = dense[3, 0] = 1e-3
    with pytest.raises(ValueError):
        BandSymmetricMatrix.from_dense(dense, half_bandwidth=1)
    kept = BandSymmetricMatrix.from_dense(dense, half_bandwidth=1, tol=1e-2)
    assert kept.to_dense()[0, 3] == 0.0


def test_direct_construction_validates_band_lengths():
    BandSymmetricMatrix(dim=3, half_bandwidth=1, bands=((1.0, 1.0, 1.0), (0.5, 0.5)))
    with pytest.raises(ValueError):
        BandSymmetricMatrix(dim=3, half_bandwidth=1, bands=((1.0, 1.0, 1.0), (0.5,)))
    with pytest.raises(ValueError):
        BandSymmetricMatrix(dim=0, half_bandwidth=0, bands=((),))
