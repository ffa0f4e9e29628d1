"""Engine tests: the Jacobi eigensolver against the numpy/scipy oracles."""

import numpy as np
import pytest

from cosetpdo.jacobi import (JacobiError, gram_singular_values, gram_svd,
                             hermitian_eigh, hermitian_expm, psd_power)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 24])
def test_eigh_matches_numpy(n):
    rng = np.random.default_rng(n)
    a = random_hermitian(rng, n)
    w, v = hermitian_eigh(a)
    assert np.all(np.diff(w) <= 1e-12)
    assert np.abs(v @ v.conj().T - np.eye(n)).max() < 1e-12
    assert np.abs((v * w) @ v.conj().T - a).max() < 1e-12 * max(1, np.abs(a).max())
    w_np = np.sort(np.linalg.eigvalsh(a))[::-1]
    assert np.abs(w - w_np).max() < 1e-12 * max(1.0, np.abs(w_np).max())


def test_eigh_diagonal_and_zero():
    w, v = hermitian_eigh(np.diag([0.0, 2.0, 1.0]).astype(complex))
    assert np.allclose(w, [2.0, 1.0, 0.0])
    assert np.abs(v @ v.conj().T - np.eye(3)).max() < 1e-14
    w, v = hermitian_eigh(np.zeros((4, 4), dtype=complex))
    assert np.allclose(w, 0.0)


def test_eigh_degenerate_spectrum():
    rng = np.random.default_rng(7)
    q, _ = np.linalg.qr(rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6)))
    a = (q * np.array([3.0, 3.0, 3.0, 1.0, 1.0, 0.0])) @ q.conj().T
    w, v = hermitian_eigh(a)
    assert np.abs((v * w) @ v.conj().T - a).max() < 1e-12


def test_eigh_deterministic():
    rng = np.random.default_rng(3)
    a = random_hermitian(rng, 7)
    w1, v1 = hermitian_eigh(a.copy())
    w2, v2 = hermitian_eigh(a.copy())
    assert np.array_equal(w1, w2) and np.array_equal(v1, v2)


def test_eigh_rejects_nonsquare():
    with pytest.raises(ValueError):
        hermitian_eigh(np.zeros((2, 3)))


@pytest.mark.parametrize("n", [2, 5, 11])
def test_singular_values_match_numpy(n):
    rng = np.random.default_rng(n + 100)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    s = gram_singular_values(a)
    s_np = np.linalg.svd(a, compute_uv=False)
    assert np.abs(s - s_np).max() < 1e-11 * s_np.max()


def test_gram_svd_reconstructs():
    rng = np.random.default_rng(5)
    a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    a[:, 3] = a[:, 0]          # force rank deficiency
    u, s, vh = gram_svd(a)
    assert s.size == 5
    assert np.abs((u * s) @ vh - a).max() < 1e-11 * s.max()
    assert np.abs(u.conj().T @ u - np.eye(s.size)).max() < 1e-10


def test_psd_power_and_expm():
    rng = np.random.default_rng(9)
    b = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    a = b @ b.conj().T
    half = psd_power(a, 0.5)
    assert np.abs(half @ half - a).max() < 1e-10 * np.abs(a).max()
    import scipy.linalg as sla
    assert np.abs(hermitian_expm(a, -0.3) - sla.expm(-0.3 * a)).max() \
        < 1e-10 * np.abs(sla.expm(-0.3 * a)).max()


def test_psd_power_rejects_indefinite():
    with pytest.raises(JacobiError):
        psd_power(np.diag([1.0, -0.5]).astype(complex), 0.5)
