"""Singular values, Schatten (quasi-)norms and their symbol-side expressions.

Operators act on L^2 of the quotient with the normalized measure; with uniform
weights the operator's singular values are those of the matrix K / N.
"""

from dataclasses import dataclass

import numpy as np

from .jacobi import clean_gram_eigenvalues, gram_singular_values, hermitian_eigh
from .quantize import LinearOperator, symbol_from_operator


@dataclass
class SingularSpectrum:
    values: np.ndarray       # nonincreasing, >= 0
    dim: int


@dataclass
class SchattenReport:
    r: float
    quasi_norm: float        # ||T||_{S_r}
    symbol_side: float       # the symbol-criterion quantity, reported as a norm
    residual: float          # relative gap between ||T||_{S_r}^r and the criterion sum


def singular_values(op):
    vals = gram_singular_values(op.matrix)
    return SingularSpectrum(values=vals, dim=op.space.n_cosets)


def schatten_norm(spectrum, r):
    """(sum s_n^r)^(1/r); the largest singular value for r = inf."""
    s = spectrum.values
    if r == np.inf or r == "inf":
        return float(s.max(initial=0.0))
    r = float(r)
    if r <= 0.0:
        raise ValueError("schatten_norm requires r > 0")
    positive = s[s > 0.0]
    if positive.size == 0:
        return 0.0
    return float(np.sum(positive ** r) ** (1.0 / r))


def hs_norm_via_symbol(sigma):
    """sqrt( int sum_xi d_xi ||sigma(x, xi) P_xi||_HS^2 dmu(x) )."""
    mu = sigma.space.weight
    total = 0.0
    for cls, blk in zip(sigma.dual.classes, sigma.blocks):
        compressed = blk @ cls.projection
        total += cls.dim * mu * float(np.sum(np.abs(compressed) ** 2))
    return float(np.sqrt(total))


def fractional_modulus(op, s):
    """|T|^s = (T* T)^(s/2) as an operator on the same space.

    Shares the cleaned Gram spectrum with singular_values so that the two
    Schatten pipelines see identical eigenvalues.
    """
    if s <= 0.0:
        raise ValueError("fractional_modulus requires s > 0")
    a = op.matrix
    w, v = hermitian_eigh(a.conj().T @ a)
    w = clean_gram_eigenvalues(w)
    powered = (v * w ** (s / 2.0)) @ v.conj().T
    return LinearOperator(space=op.space, kernel=op.space.n_cosets * powered)


def schatten_criterion_check(op, dual, r):
    """Compare ||T||_{S_r}^r against the Hilbert-Schmidt symbol quantity of |T|^{r/2}."""
    if r <= 0.0:
        raise ValueError("schatten_criterion_check requires r > 0")
    quasi = schatten_norm(singular_values(op), r)
    half = fractional_modulus(op, r / 2.0)
    symbol_side_sq = hs_norm_via_symbol(symbol_from_operator(half, dual)) ** 2
    lhs = quasi ** r
    scale = max(lhs, symbol_side_sq, np.finfo(float).tiny)
    return SchattenReport(r=float(r), quasi_norm=quasi,
                          symbol_side=float(np.sqrt(symbol_side_sq)),
                          residual=abs(lhs - symbol_side_sq) / scale)
