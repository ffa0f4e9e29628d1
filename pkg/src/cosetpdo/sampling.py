"""Seeded random test objects.

The generator is Philox (counter-based, 64-bit, splittable), so identical
seeds reproduce identical operators on any platform.  Random operators are
drawn from the quantization image: a complex Gaussian canonical symbol is
quantized.  On that class symbol extraction inverts quantization exactly,
which is what the round-trip identities assert.
"""

import numpy as np

from .quantize import MatrixSymbol, op_from_symbol

GENERATOR_NAME = "philox-4x64"


def rng_from_seed(seed):
    return np.random.Generator(np.random.Philox(seed))


def _gaussian(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_coset_function_values(space, rng):
    return _gaussian(rng, space.n_cosets)


def random_canonical_symbol(dual, rng):
    """Gaussian symbol field compressed to P sigma P (canonical)."""
    n = dual.space.n_cosets
    blocks = []
    for cls in dual.classes:
        raw = _gaussian(rng, (n, cls.dim, cls.dim))
        blocks.append(np.einsum("ab,xbc,cd->xad", cls.projection, raw, cls.projection))
    return MatrixSymbol(dual=dual, blocks=tuple(blocks))


def random_convolution_symbol(dual, rng):
    """Canonical symbol constant in the coset variable (convolution-type operator)."""
    n = dual.space.n_cosets
    blocks = []
    for cls in dual.classes:
        raw = cls.projection @ _gaussian(rng, (cls.dim, cls.dim)) @ cls.projection
        blocks.append(np.broadcast_to(raw, (n, cls.dim, cls.dim)).copy())
    return MatrixSymbol(dual=dual, blocks=tuple(blocks))


def random_operator(dual, rng):
    """Random element of the quantization image."""
    return op_from_symbol(random_canonical_symbol(dual, rng))


def random_convolution_operator(dual, rng):
    return op_from_symbol(random_convolution_symbol(dual, rng))


def random_kernel_operator(space, rng):
    """Unconstrained Gaussian kernel; generally outside the quantization image."""
    from .quantize import LinearOperator
    return LinearOperator(space=space, kernel=_gaussian(rng, (space.n_cosets,) * 2))
