"""Bi-invariant Cayley Laplacians, descended operators, heat symbols and traces.

A symmetric, conjugation-closed generating multiset S gives the operator
|S| I - sum_{s in S} (right translation by s) on the group.  By Schur's lemma
it is the scalar

    lambda_xi = |S| - (1/d_xi) sum_{s in S} character_xi(s)

on each isotypic block, so the coefficient functions on the quotient are
eigenfunctions and e^{-t lambda_xi} P_xi is the heat symbol.
"""

from dataclasses import dataclass

import numpy as np

from .groups import GroupError
from .jacobi import hermitian_eigh
from .quantize import LinearOperator, MatrixSymbol, op_from_symbol


@dataclass
class BiInvariantLaplacian:
    group: object
    generators: tuple
    eigenvalues: dict          # irrep label -> lambda


@dataclass
class HeatSymbol:
    t: float
    laplacian: BiInvariantLaplacian
    symbol: MatrixSymbol


def laplacian_from_generators(group, generators, catalog):
    """Validate the generating multiset and compute per-irrep eigenvalues."""
    gens = tuple(int(s) for s in generators)
    counts = {}
    for s in gens:
        if s < 0 or s >= group.order:
            raise GroupError(f"generator {s} out of range")
        counts[s] = counts.get(s, 0) + 1
    for s in gens:
        if counts.get(group.inv(s), 0) != counts[s]:
            raise GroupError(f"generator set not symmetric (element {s})")
    for x in range(group.order):
        xi = group.inv(x)
        for s in set(gens):
            conj = group.mul(group.mul(x, s), xi)
            if counts.get(conj, 0) != counts[s]:
                raise GroupError(f"generator set not conjugation-closed (element {s})")
    eigenvalues = {}
    for rho in catalog:
        chi_sum = sum(rho.character[s] for s in gens) if gens else 0.0
        lam = complex(len(gens) - chi_sum / rho.dim)
        if abs(lam.imag) > 1e-12:
            raise GroupError(f"eigenvalue for {rho.label} is not real")
        eigenvalues[rho.label] = lam.real
    return BiInvariantLaplacian(group=group, generators=gens, eigenvalues=eigenvalues)


def group_laplacian_matrix(lap):
    """|S| I - sum_s R_s acting on functions on the group."""
    group = lap.group
    n = group.order
    m = len(lap.generators) * np.eye(n)
    for s in lap.generators:
        for x in range(n):
            m[x, group.cayley[x, s]] -= 1.0
    return m


def descend_laplacian(lap, space):
    """The Laplacian acting on coset functions: (Lf)(xH) = sum_s f(xH) - f(x s H)."""
    if space.group is not lap.group:
        raise GroupError("laplacian and coset space belong to different groups")
    n = space.n_cosets
    m = len(lap.generators) * np.eye(n)
    for i, rep in enumerate(space.representatives):
        for s in lap.generators:
            m[i, space.coset_of[space.group.cayley[rep, s]]] -= 1.0
    return LinearOperator(space=space, kernel=n * m)


def heat_symbol(lap, dual, t):
    """Blocks e^{-t lambda_xi} P_xi, constant over cosets."""
    if t < 0.0:
        raise ValueError("heat_symbol requires t >= 0")
    n = dual.space.n_cosets
    blocks = []
    for cls in dual.classes:
        lam = lap.eigenvalues[cls.label]
        block = np.exp(-t * lam) * cls.projection
        blocks.append(np.broadcast_to(block, (n, cls.dim, cls.dim)).copy())
    return HeatSymbol(t=float(t), laplacian=lap,
                      symbol=MatrixSymbol(dual=dual, blocks=tuple(blocks)))


def heat_operator(lap, dual, t):
    return op_from_symbol(heat_symbol(lap, dual, t).symbol)


def heat_trace(lap, dual, t):
    """sum_xi d_xi e^{-t lambda_xi} Tr(P_xi)."""
    if t < 0.0:
        raise ValueError("heat_trace requires t >= 0")
    return float(sum(cls.dim * np.exp(-t * lap.eigenvalues[cls.label]) * cls.rank
                     for cls in dual.classes))


def heat_trace_oracle(lap, space, t):
    """Trace of exp(-t L) from the eigendecomposition of the descended matrix."""
    if t < 0.0:
        raise ValueError("heat_trace_oracle requires t >= 0")
    m = descend_laplacian(lap, space).matrix
    w, _ = hermitian_eigh(m)
    return float(np.sum(np.exp(-t * w)))


def heat_operator_oracle(lap, space, t):
    """exp(-t L) on coset functions via the eigendecomposition of L."""
    m = descend_laplacian(lap, space).matrix
    w, v = hermitian_eigh(m)
    e = (v * np.exp(-t * w)) @ v.conj().T
    return LinearOperator(space=space, kernel=space.n_cosets * e)
