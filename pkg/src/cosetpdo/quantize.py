"""Matrix-valued symbols, quantization, and symbol extraction.

Conventions.  A symbol field sigma assigns to every (coset x, dual class xi)
a d x d matrix.  Quantization builds the kernel

    K(x, y) = sum_xi d_xi Tr( Gamma_xi(x) sigma(x, xi) Gamma_xi(y)* )

acting by (Tf)(x) = sum_y mu K(x, y) f(y).  Because Gamma carries the
projection on both sides, the kernel only sees the two-sided compression
P sigma P; a symbol with P sigma = sigma = sigma P is called canonical, and on
canonical symbols quantization and extraction are mutually inverse.
Extraction from an arbitrary operator returns

    sigma(x, xi) = xi(rep x)* (T Gamma_xi)(x),

which always satisfies sigma P = sigma; the left defect |P sigma - sigma| is
the consistency residual of the defining symbol equation and vanishes exactly
when T is in the image of quantization.
"""

from dataclasses import dataclass

import numpy as np

from .fourier import CosetFunction, forward_transform
from .groups import GroupError


@dataclass
class MatrixSymbol:
    dual: object
    blocks: tuple              # per class an array (n_cosets, d, d)

    @property
    def space(self):
        return self.dual.space

    def left_residual(self):
        """max |P sigma - sigma|: failure of the defining symbol equation."""
        out = 0.0
        for cls, blk in zip(self.dual.classes, self.blocks):
            out = max(out, float(np.abs(cls.projection @ blk - blk).max()))
        return out

    def right_residual(self):
        out = 0.0
        for cls, blk in zip(self.dual.classes, self.blocks):
            out = max(out, float(np.abs(blk @ cls.projection - blk).max()))
        return out

    def is_canonical(self, tol=1e-11):
        return max(self.left_residual(), self.right_residual()) <= tol

    def canonicalized(self):
        """Two-sided compression P sigma P; quantization is unchanged by it."""
        blocks = tuple(np.einsum("ab,xbc,cd->xad", cls.projection, blk, cls.projection)
                       for cls, blk in zip(self.dual.classes, self.blocks))
        return MatrixSymbol(dual=self.dual, blocks=blocks)


@dataclass
class LinearOperator:
    space: object
    kernel: np.ndarray        # (N, N) complex, action (Tf)(x) = sum_y mu K(x,y) f(y)

    def __post_init__(self):
        self.kernel = np.asarray(self.kernel, dtype=complex)
        n = self.space.n_cosets
        if self.kernel.shape != (n, n):
            raise GroupError("kernel shape does not match the coset space")

    @property
    def matrix(self):
        """The operator as a plain matrix on coordinate vectors: K / N."""
        return self.kernel * self.space.weight


def zero_symbol(dual):
    n = dual.space.n_cosets
    return MatrixSymbol(dual=dual, blocks=tuple(
        np.zeros((n, cls.dim, cls.dim), dtype=complex) for cls in dual.classes))


def identity_symbol(dual):
    """sigma(x, xi) = P_xi; quantizes to the identity operator."""
    n = dual.space.n_cosets
    return MatrixSymbol(dual=dual, blocks=tuple(
        np.broadcast_to(cls.projection, (n, cls.dim, cls.dim)).copy()
        for cls in dual.classes))


def identity_operator(space):
    return LinearOperator(space=space,
                          kernel=space.n_cosets * np.eye(space.n_cosets, dtype=complex))


def op_from_symbol(sigma):
    """Quantize a symbol field into a kernel operator."""
    dual = sigma.dual
    n = dual.space.n_cosets
    kernel = np.zeros((n, n), dtype=complex)
    for cls, blk in zip(dual.classes, sigma.blocks):
        kernel += cls.dim * np.einsum("xab,xbc,yac->xy", cls.gammas, blk,
                                      cls.gammas.conj())
    return LinearOperator(space=dual.space, kernel=kernel)


def apply_operator(op, f):
    if op.space is not f.space:
        raise GroupError("operator and function live on different spaces")
    return CosetFunction(space=op.space,
                         values=op.space.weight * (op.kernel @ f.values))


def apply_via_symbol(sigma, f):
    """Trace-sum form sum_xi d_xi Tr(Gamma sigma fhat); equals the kernel action."""
    coeffs = forward_transform(f, sigma.dual)
    n = sigma.space.n_cosets
    values = np.zeros(n, dtype=complex)
    for cls, blk, fb in zip(sigma.dual.classes, sigma.blocks, coeffs.blocks):
        values += cls.dim * np.einsum("xab,xbc,ca->x", cls.gammas, blk, fb)
    return CosetFunction(space=sigma.space, values=values)


def symbol_from_operator(op, dual):
    """Canonical-solution extraction sigma(x, xi) = xi(rep x)* (T Gamma_xi)(x)."""
    if op.space is not dual.space:
        raise GroupError("operator and dual object live on different spaces")
    mu = op.space.weight
    reps = list(op.space.representatives)
    blocks = []
    for cls in dual.classes:
        tg = mu * np.einsum("xw,wab->xab", op.kernel, cls.gammas)
        u = cls.irrep.matrices[reps]
        blocks.append(np.einsum("xba,xbc->xac", u.conj(), tg))
    return MatrixSymbol(dual=dual, blocks=tuple(blocks))


def compose(s_op, t_op):
    """Operator composition S after T with the mu-weighted kernel product."""
    if s_op.space is not t_op.space:
        raise GroupError("operators live on different spaces")
    mu = s_op.space.weight
    return LinearOperator(space=s_op.space, kernel=mu * (s_op.kernel @ t_op.kernel))
