"""Singular values, Schatten norms, and the symbol-side criteria."""

import numpy as np
import pytest

from cosetpdo.quantize import (LinearOperator, identity_operator,
                               symbol_from_operator)
from cosetpdo.sampling import (random_kernel_operator, random_operator,
                               rng_from_seed)
from cosetpdo.schatten import (fractional_modulus, hs_norm_via_symbol,
                               schatten_criterion_check, schatten_norm,
                               singular_values)

from test_groups import PAIRS, pair


def test_identity_spectrum():
    _, space, _ = pair("S3", "Z2a")
    spec = singular_values(identity_operator(space))
    assert np.allclose(spec.values, 1.0)
    assert abs(schatten_norm(spec, 2.0) - np.sqrt(3)) < 1e-14
    assert abs(schatten_norm(spec, 1.0) - 3.0) < 1e-14
    assert abs(schatten_norm(spec, np.inf) - 1.0) < 1e-14


def test_rank_one_spectrum():
    rng = rng_from_seed(31)
    _, space, _ = pair("S3", "Z2a")
    n = space.n_cosets
    u = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    u /= np.sqrt(space.weight * np.sum(np.abs(u) ** 2))   # L2(mu)-normalized
    v /= np.sqrt(space.weight * np.sum(np.abs(v) ** 2))
    op = LinearOperator(space=space, kernel=np.outer(u, v.conj()))
    spec = singular_values(op)
    assert abs(spec.values[0] - 1.0) < 1e-12
    assert np.abs(spec.values[1:]).max() < 1e-12


def test_unitary_diagonal_scaling():
    _, space, _ = pair("S3", "Z2a")
    scale = 0.7 - 0.2j
    op = LinearOperator(space=space,
                        kernel=scale * space.n_cosets * np.eye(space.n_cosets))
    assert np.allclose(singular_values(op).values, abs(scale))


def test_schatten_norm_r2_is_frobenius():
    rng = rng_from_seed(32)
    for gname, hname in PAIRS:
        _, space, _ = pair(gname, hname)
        op = random_kernel_operator(space, rng)
        lhs = schatten_norm(singular_values(op), 2.0)
        rhs = np.linalg.norm(op.matrix)
        assert abs(lhs - rhs) < 1e-12 * max(1.0, rhs)


def test_schatten_norm_rejects_nonpositive_r():
    _, space, _ = pair("S3", "Z2a")
    spec = singular_values(identity_operator(space))
    with pytest.raises(ValueError):
        schatten_norm(spec, 0.0)


def test_hs_identity_universal():
    """||T||_S2 equals the symbol L2 quantity even off the quantization image."""
    rng = rng_from_seed(33)
    for gname, hname in PAIRS:
        _, space, dual = pair(gname, hname)
        for make in (random_operator, lambda d, r: random_kernel_operator(space, r)):
            op = make(dual, rng)
            lhs = hs_norm_via_symbol(symbol_from_operator(op, dual))
            rhs = schatten_norm(singular_values(op), 2.0)
            assert abs(lhs - rhs) < 1e-10 * max(1.0, rhs), (gname, hname)


def test_hs_identity_identity_symbol():
    from cosetpdo.quantize import identity_symbol
    for gname, hname in PAIRS:
        _, space, dual = pair(gname, hname)
        val = hs_norm_via_symbol(identity_symbol(dual))
        assert abs(val - np.sqrt(space.n_cosets)) < 1e-12


def test_kernel_l2_identity():
    """||T||_S2^2 equals the mu x mu kernel integral."""
    rng = rng_from_seed(34)
    for gname, hname in PAIRS:
        _, space, _ = pair(gname, hname)
        op = random_kernel_operator(space, rng)
        lhs = schatten_norm(singular_values(op), 2.0) ** 2
        mu = space.weight
        rhs = float(np.sum(np.abs(mu * op.kernel) ** 2))
        assert abs(lhs - rhs) < 1e-12 * max(1.0, rhs)


def test_fractional_modulus_properties():
    rng = rng_from_seed(35)
    _, space, dual = pair("S4", "S3")
    op = random_kernel_operator(space, rng)
    # |T|^1 of a Hermitian PSD operator is itself
    a = op.matrix
    psd = LinearOperator(space=space, kernel=space.n_cosets * (a @ a.conj().T))
    back = fractional_modulus(psd, 1.0)
    assert np.abs(back.kernel - psd.kernel).max() < 1e-11 * np.abs(psd.kernel).max()
    # |T|^2 = T* T with mu-weighted composition
    sq = fractional_modulus(op, 2.0)
    oracle = space.weight * (op.kernel.conj().T @ op.kernel)
    assert np.abs(sq.kernel - oracle).max() < 1e-11 * np.abs(oracle).max()
    # spectra are elementwise powers
    for s in (0.5, 1.5, 3.0):
        left = singular_values(fractional_modulus(op, s)).values
        right = np.linalg.svd(op.matrix, compute_uv=False) ** s
        assert np.abs(left - right).max() < 1e-11 * max(1.0, right.max())


def test_power_identity_grid():
    """||T||_{S_r}^r = || |T|^{r/t} ||_{S_t}^t for the tested grid."""
    rng = rng_from_seed(36)
    for gname, hname in [("S3", "Z2a"), ("S4", "V4"), ("Q8", "Z4i")]:
        _, space, _ = pair(gname, hname)
        op = random_kernel_operator(space, rng)
        spec = singular_values(op)
        for r in (0.5, 1.0, 3.0):
            for t in (1.0, 2.0):
                lhs = schatten_norm(spec, r) ** r
                rhs = schatten_norm(singular_values(fractional_modulus(op, r / t)), t) ** t
                assert abs(lhs - rhs) < 1e-9 * max(1.0, lhs), (gname, hname, r, t)


def test_schatten_criterion():
    rng = rng_from_seed(37)
    for gname, hname in PAIRS:
        _, space, dual = pair(gname, hname)
        for _ in range(3):
            op = random_operator(dual, rng)
            for r in (0.5, 1.0, 2.0, 3.0):
                rep = schatten_criterion_check(op, dual, r)
                assert rep.residual < 1e-9, (gname, hname, r, rep.residual)


def test_schatten_criterion_identity_r1():
    _, space, dual = pair("S3", "Z2a")
    rep = schatten_criterion_check(identity_operator(space), dual, 1.0)
    assert abs(rep.quasi_norm - 3.0) < 1e-12
    assert abs(rep.symbol_side ** 2 - 3.0) < 1e-12


def test_schatten_criterion_rank_one():
    _, space, dual = pair("S3", "Z2a")
    rng = rng_from_seed(38)
    u = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    s_target = 0.37
    u /= np.sqrt(space.weight * np.sum(np.abs(u) ** 2))
    op = LinearOperator(space=space, kernel=s_target * np.outer(u, u.conj()))
    rep = schatten_criterion_check(op, dual, 1.0)
    assert abs(rep.quasi_norm - s_target) < 1e-12
    assert rep.residual < 1e-10


def test_spectrum_unitary_invariance():
    """Composing with the regular action of any group element preserves spectra."""
    rng = rng_from_seed(39)
    for gname, hname in [("S3", "Z2a"), ("D4", "Z2r"), ("S4", "S3")]:
        entry, space, dual = pair(gname, hname)
        op = random_operator(dual, rng)
        base = singular_values(op).values
        n = space.n_cosets
        for g in range(entry.group.order):
            perm = np.zeros((n, n))
            for x in range(n):
                target = space.coset_of[entry.group.cayley[g, space.representatives[x]]]
                perm[target, x] = 1.0
            moved = LinearOperator(space=space, kernel=n * perm @ op.matrix)
            assert np.abs(singular_values(moved).values - base).max() < 1e-11


def test_uniform_weight_change_of_basis():
    """With uniform mu the weighted and plain matrix geometries coincide:
    conjugating by diag(sqrt(mu)) leaves the operator matrix unchanged, so
    the singular values of the operator are those of K / N."""
    rng = rng_from_seed(41)
    _, space, _ = pair("S4", "S3")
    op = random_kernel_operator(space, rng)
    w = np.sqrt(space.weight) * np.eye(space.n_cosets)
    conjugated = w @ op.matrix @ np.linalg.inv(w)
    assert np.abs(conjugated - op.matrix).max() < 1e-14
    s_plain = np.linalg.svd(op.matrix, compute_uv=False)
    assert np.abs(singular_values(op).values - s_plain).max() < 1e-12 * s_plain.max()


def test_schatten_monotone_in_r():
    rng = rng_from_seed(40)
    _, space, _ = pair("S4", "V4")
    spec = singular_values(random_kernel_operator(space, rng))
    grid = [0.5, 1.0, 2.0, 4.0, np.inf]
    vals = [schatten_norm(spec, r) for r in grid]
    for a, b in zip(vals, vals[1:]):
        assert b <= a + 1e-12
