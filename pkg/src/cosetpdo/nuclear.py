"""Rank-one decompositions, nuclear traces, adjoint and product symbol formulas."""

from dataclasses import dataclass

import numpy as np

from .fourier import CosetFunction, forward_transform, lq_norm
from .jacobi import gram_svd
from .quantize import LinearOperator, MatrixSymbol
from .schatten import schatten_norm, singular_values

FACTOR_TRUNCATION = 1e-12


def _check_indices(r, p1, p2):
    if not (0.0 < r <= 1.0):
        raise ValueError("r must lie in (0, 1]")
    if p1 < 1.0 or p2 < 1.0 or p1 == np.inf or p2 == np.inf:
        raise ValueError("p1 and p2 must lie in [1, inf)")


def conjugate_index(p):
    if p == 1.0:
        return np.inf
    return p / (p - 1.0)


@dataclass
class NuclearDecomposition:
    space: object
    terms: tuple           # pairs (h_k values, g_k values), K(x,y) = sum h_k(x) g_k(y)
    r: float = 1.0
    p1: float = 2.0
    p2: float = 2.0

    def reconstruct(self):
        n = self.space.n_cosets
        kernel = np.zeros((n, n), dtype=complex)
        for h, g in self.terms:
            kernel += np.outer(h, g)
        return LinearOperator(space=self.space, kernel=kernel)


@dataclass
class NuclearityReport:
    r: float
    p1: float
    p2: float
    functional: float
    cost: float
    trace_kernel: complex
    trace_symbol: complex
    trace_eigen: complex
    residual_symbol: float
    residual_eigen: float


def kernel_factorization(op, r=1.0, p1=2.0, p2=2.0):
    """Rank factorization of the kernel by SVD: h_k = s_k u_k, g_k = conj(v_k)."""
    _check_indices(r, p1, p2)
    u, s, vh = gram_svd(op.kernel, truncate=FACTOR_TRUNCATION)
    terms = tuple((s[k] * u[:, k], vh[k, :]) for k in range(s.size))
    return NuclearDecomposition(space=op.space, terms=terms, r=r, p1=p1, p2=p2)


def decomposition_cost(dec):
    """sum_k ||g_k||_{p1'}^r ||h_k||_{p2}^r with p1' the conjugate index."""
    _check_indices(dec.r, dec.p1, dec.p2)
    q = conjugate_index(dec.p1)
    total = 0.0
    for h, g in dec.terms:
        gn = lq_norm(CosetFunction(dec.space, g), q)
        hn = lq_norm(CosetFunction(dec.space, h), dec.p2)
        total += (gn ** dec.r) * (hn ** dec.r)
    return float(total)


def symbol_from_decomposition(dec, dual):
    """sigma(x, xi) = xi(x)* sum_k h_k(x) (conj-transform of g_k at xi)*."""
    space = dual.space
    if dec.space is not space:
        raise ValueError("decomposition and dual object live on different spaces")
    reps = list(space.representatives)
    blocks = []
    for idx, cls in enumerate(dual.classes):
        acc = np.zeros((space.n_cosets, cls.dim, cls.dim), dtype=complex)
        for h, g in dec.terms:
            ghat = forward_transform(CosetFunction(space, np.conj(g)), dual).blocks[idx]
            acc += np.einsum("x,ab->xab", h, ghat.conj().T)
        u = cls.irrep.matrices[reps]
        blocks.append(np.einsum("xba,xbc->xac", u.conj(), acc))
    return MatrixSymbol(dual=dual, blocks=tuple(blocks))


def sufficiency_functional(sigma, r, p1, p2):
    """sum_xi d_xi^(2 + r/min(2,p1)) * || ||sigma(.,xi)^t||_{inf->inf} ||_{p2}^r."""
    _check_indices(r, p1, p2)
    p1_tilde = min(2.0, p1)
    mu = sigma.space.weight
    total = 0.0
    for cls, blk in zip(sigma.dual.classes, sigma.blocks):
        # inf->inf norm of the transposed block = max absolute column sum
        per_coset = np.abs(blk).sum(axis=1).max(axis=1)
        lp = float((mu * np.sum(per_coset ** p2)) ** (1.0 / p2))
        total += cls.dim ** (2.0 + r / p1_tilde) * lp ** r
    return float(total)


def nuclear_trace_via_symbol(sigma):
    """int sum_xi d_xi Tr(P_xi sigma(x, xi)) dmu(x)."""
    mu = sigma.space.weight
    total = 0.0 + 0.0j
    for cls, blk in zip(sigma.dual.classes, sigma.blocks):
        total += cls.dim * mu * np.einsum("ab,xba->", cls.projection, blk)
    return complex(total)


def kernel_diagonal_trace(op):
    """int K(x, x) dmu(x)."""
    return complex(op.space.weight * np.trace(op.kernel))


def eigenvalue_sum(op):
    """Sum of eigenvalues of the operator matrix (finite-dimensional trace check)."""
    return complex(np.sum(np.linalg.eigvals(op.matrix)))


def adjoint_operator(op):
    """Adjoint for the L^2(mu) pairing: K*(x, y) = conj(K(y, x)).

    At finite scale every L^p space shares the same underlying vectors, so
    this one kernel is the adjoint for every index pair (p2', p1'); only the
    norms attached to those spaces differ, never the vectors.
    """
    return LinearOperator(space=op.space, kernel=op.kernel.conj().T)


def adjoint_symbol_via_decomposition(dec, dual):
    """tau(x, xi) = xi(x)* sum_k conj(g_k)(x) (transform of h_k at xi)*."""
    swapped = NuclearDecomposition(
        space=dec.space,
        terms=tuple((np.conj(g), np.conj(h)) for h, g in dec.terms),
        r=dec.r, p1=dec.p1, p2=dec.p2)
    return symbol_from_decomposition(swapped, dual)


def adjoint_symbol_via_resummation(sigma):
    """Adjoint symbol by the double sum over classes and cosets.

    tau(x, xi) = xi(x)* sum_eta d_eta int Tr[(Gamma_eta(y) sigma(y, eta))*
    Gamma_eta(x)] Gamma_xi(y) dmu(y), evaluated verbatim.
    """
    dual = sigma.dual
    space = dual.space
    mu = space.weight
    n = space.n_cosets
    reps = list(space.representatives)
    scalar = np.zeros((n, n), dtype=complex)   # [y, x]
    for cls, blk in zip(dual.classes, sigma.blocks):
        gs = np.einsum("yab,ybc->yac", cls.gammas, blk)
        scalar += cls.dim * np.einsum("yba,xba->yx", gs.conj(), cls.gammas)
    blocks = []
    for cls in dual.classes:
        acc = mu * np.einsum("yx,yab->xab", scalar, cls.gammas)
        u = cls.irrep.matrices[reps]
        blocks.append(np.einsum("xba,xbc->xac", u.conj(), acc))
    return MatrixSymbol(dual=dual, blocks=tuple(blocks))


def self_adjointness_check(op, dual, tol=1e-9):
    """Compare the symbol of T with the symbol of T*; equivalent to K = K*."""
    from .quantize import symbol_from_operator
    sig = symbol_from_operator(op, dual)
    tau = symbol_from_operator(adjoint_operator(op), dual)
    residual = 0.0
    for a, b in zip(sig.blocks, tau.blocks):
        residual = max(residual, float(np.abs(a - b).max()))
    scale = max(float(np.abs(op.kernel).max()), 1.0)
    return residual <= tol * scale, residual


def product_symbol(sigma_s, dec_t):
    """Symbol of S after T: lambda(x, xi) = xi(x)* sum_k h'_k(x) ghat_k(xi)*.

    h'_k is the quantization trace sum of sigma_s applied to h_k.
    """
    dual = sigma_s.dual
    space = dual.space
    if dec_t.space is not space:
        raise ValueError("symbol and decomposition live on different spaces")
    reps = list(space.representatives)
    n = space.n_cosets
    primed = []
    for h, g in dec_t.terms:
        hhat = forward_transform(CosetFunction(space, h), dual)
        hp = np.zeros(n, dtype=complex)
        for cls, blk, hb in zip(dual.classes, sigma_s.blocks, hhat.blocks):
            hp += cls.dim * np.einsum("xab,xbc,ca->x", cls.gammas, blk, hb)
        primed.append(hp)
    blocks = []
    for idx, cls in enumerate(dual.classes):
        acc = np.zeros((n, cls.dim, cls.dim), dtype=complex)
        for (h, g), hp in zip(dec_t.terms, primed):
            ghat = forward_transform(CosetFunction(space, np.conj(g)), dual).blocks[idx]
            acc += np.einsum("x,ab->xab", hp, ghat.conj().T)
        u = cls.irrep.matrices[reps]
        blocks.append(np.einsum("xba,xbc->xac", u.conj(), acc))
    return MatrixSymbol(dual=dual, blocks=tuple(blocks))


def nuclearity_report(op, dual, r=1.0, p1=2.0, p2=2.0):
    """Functional, decomposition cost and the three trace pipelines."""
    from .quantize import symbol_from_operator
    _check_indices(r, p1, p2)
    sigma = symbol_from_operator(op, dual)
    dec = kernel_factorization(op, r=r, p1=p1, p2=p2)
    t_kernel = kernel_diagonal_trace(op)
    t_symbol = nuclear_trace_via_symbol(sigma)
    t_eigen = eigenvalue_sum(op)
    scale = max(schatten_norm(singular_values(op), 1.0), np.finfo(float).tiny)
    return NuclearityReport(
        r=r, p1=p1, p2=p2,
        functional=sufficiency_functional(sigma, r, p1, p2),
        cost=decomposition_cost(dec),
        trace_kernel=t_kernel, trace_symbol=t_symbol, trace_eigen=t_eigen,
        residual_symbol=abs(t_kernel - t_symbol) / scale,
        residual_eigen=abs(t_kernel - t_eigen) / scale)
