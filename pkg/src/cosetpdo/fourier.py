"""Fourier transform on the quotient space, inversion, Plancherel and L^q norms."""

from dataclasses import dataclass

import numpy as np

from .groups import GroupError


@dataclass
class CosetFunction:
    space: object
    values: np.ndarray        # (n_cosets,) complex

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.space.n_cosets,):
            raise GroupError("expected one value per coset")


@dataclass
class FourierCoefficients:
    dual: object
    blocks: tuple             # one (d, d) complex matrix per dual class


def forward_transform(f, dual):
    """Blocks  sum_x mu f(x) Gamma_xi(x)*  per dual class."""
    if f.space is not dual.space:
        raise GroupError("function and dual object live on different spaces")
    mu = f.space.weight
    blocks = tuple(np.einsum("x,xba->ab", mu * f.values, cls.gammas.conj())
                   for cls in dual.classes)
    return FourierCoefficients(dual=dual, blocks=blocks)


def inverse_transform(coeffs):
    """f(x) = sum_xi d_xi Tr(block_xi Gamma_xi(x))."""
    dual = coeffs.dual
    n = dual.space.n_cosets
    values = np.zeros(n, dtype=complex)
    for cls, block in zip(dual.classes, coeffs.blocks):
        values += cls.dim * np.einsum("ab,xba->x", block, cls.gammas)
    return CosetFunction(space=dual.space, values=values)


def plancherel_norm(coeffs):
    """sqrt( sum_xi d_xi ||block_xi||_F^2 ), equal to the L^2(mu) norm of f."""
    return float(np.sqrt(sum(
        cls.dim * np.linalg.norm(block) ** 2
        for cls, block in zip(coeffs.dual.classes, coeffs.blocks))))


def lq_norm(f, q):
    """L^q norm with respect to the normalized invariant measure; q in [1, inf]."""
    mags = np.abs(f.values)
    if q == np.inf or q == "inf":
        return float(mags.max(initial=0.0))
    q = float(q)
    if q < 1.0:
        raise ValueError("lq_norm requires q >= 1")
    mu = f.space.weight
    return float((mu * np.sum(mags ** q)) ** (1.0 / q))


def l2_inner(f, g):
    """L^2(mu) inner product, linear in the first argument."""
    if f.space is not g.space:
        raise GroupError("functions live on different spaces")
    return complex(f.space.weight * np.sum(f.values * g.values.conj()))
