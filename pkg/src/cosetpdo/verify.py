"""Verification suites: every identity in the calculus as a residual check.

A suite runs against one (group, subgroup) pair with a seeded generator and
produces a VerificationReport with one record per check.  Exit semantics and
rendering live in the CLI/service layer.
"""

import time
from dataclasses import dataclass

import numpy as np

from .catalog import load_entry, resolve_subgroup
from .fourier import (CosetFunction, FourierCoefficients, forward_transform,
                      inverse_transform, l2_inner, lq_norm, plancherel_norm)
from .groups import coset_space, dual_object, is_normal
from .heat import (descend_laplacian, heat_operator, heat_symbol, heat_trace,
                   heat_trace_oracle, laplacian_from_generators)
from .jacobi import hermitian_eigh
from .nuclear import (adjoint_operator, adjoint_symbol_via_decomposition,
                      adjoint_symbol_via_resummation, kernel_diagonal_trace,
                      kernel_factorization, nuclear_trace_via_symbol,
                      nuclearity_report, product_symbol,
                      self_adjointness_check, sufficiency_functional,
                      symbol_from_decomposition)
from .quantize import (LinearOperator, MatrixSymbol, apply_operator,
                       apply_via_symbol, compose, op_from_symbol,
                       symbol_from_operator)
from .sampling import (random_canonical_symbol, random_coset_function_values,
                       random_convolution_operator, random_kernel_operator,
                       random_operator, rng_from_seed)
from .schatten import (fractional_modulus, hs_norm_via_symbol,
                       schatten_criterion_check, schatten_norm,
                       singular_values)

SUITES = ("fourier", "schatten", "nuclear", "heat")


@dataclass
class CheckResult:
    check_id: str
    suite: str
    group: str
    subgroup: str
    max_residual: float
    tolerance: float
    passed: bool
    seconds: float


@dataclass
class VerificationReport:
    suite: str
    group: str
    subgroup: str
    seed: int
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def n_passed(self):
        return sum(c.passed for c in self.checks)

    @property
    def n_failed(self):
        return sum(not c.passed for c in self.checks)

    def worst(self):
        failing = [c for c in self.checks if not c.passed]
        pool = failing or self.checks
        return max(pool, key=lambda c: c.max_residual / max(c.tolerance, 1e-300))


class _Context:
    def __init__(self, entry, sub_name, seed):
        self.entry = entry
        self.space = coset_space(entry.group, resolve_subgroup(entry, sub_name))
        self.dual = dual_object(self.space, entry.irreps)
        self.rng = rng_from_seed(seed)
        self.laplacian = laplacian_from_generators(
            entry.group, entry.laplacian_generators, entry.irreps)

    def function(self):
        return CosetFunction(self.space,
                             random_coset_function_values(self.space, self.rng))


def _rel(delta, scale):
    return float(delta) / max(float(scale), 1e-300)


def _block_diff(a, b):
    return max(float(np.abs(x - y).max()) for x, y in zip(a.blocks, b.blocks))


# -- fourier suite ------------------------------------------------------------

def _check_projection_invariants(ctx):
    worst = 0.0
    for cls in ctx.dual.classes:
        t = cls.projection
        worst = max(worst, float(np.abs(t @ t - t).max()),
                    float(np.abs(t - t.conj().T).max()))
        for h in ctx.space.subgroup.elements:
            m = cls.irrep.matrices[h]
            worst = max(worst, float(np.abs(m @ t - t).max()),
                        float(np.abs(t @ m - t).max()))
    return worst


def _check_coefficient_gram(ctx):
    funcs = []
    for cls in ctx.dual.classes:
        for a in range(cls.dim):
            for b in range(cls.rank):
                funcs.append(np.sqrt(cls.dim) * cls.gammas[:, a, b])
    funcs = np.array(funcs)
    gram = ctx.space.weight * funcs @ funcs.conj().T
    return float(np.abs(gram - np.eye(len(funcs))).max())


def _check_dimension_identity(ctx):
    counted = sum(c.dim * c.rank for c in ctx.dual.classes)
    return float(abs(counted - ctx.space.n_cosets))


def _check_entry_bounds(ctx):
    mu = ctx.space.weight
    worst = 0.0
    for cls in ctx.dual.classes:
        mags = np.abs(cls.gammas)
        for q in (1.0, 2.0, 4.0):
            norms = (mu * np.sum(mags ** q, axis=0)) ** (1.0 / q)
            bound = cls.dim ** (-0.5) if q <= 2.0 else cls.dim ** (-1.0 / q)
            worst = max(worst, float((norms - bound).max()))
        worst = max(worst, float(mags.max() - 1.0))
    return max(worst, 0.0)


def _check_weil_formula(ctx):
    from .groups import average_over_subgroup
    worst = 0.0
    for _ in range(10):
        n = ctx.entry.group.order
        f = ctx.rng.standard_normal(n) + 1j * ctx.rng.standard_normal(n)
        avg = average_over_subgroup(ctx.space, f)
        worst = max(worst, abs(ctx.space.weight * avg.sum() - f.mean()))
    return worst


def _check_plancherel(ctx):
    worst = 0.0
    for _ in range(25):
        f = ctx.function()
        lhs = plancherel_norm(forward_transform(f, ctx.dual)) ** 2
        rhs = lq_norm(f, 2.0) ** 2
        worst = max(worst, _rel(abs(lhs - rhs), rhs))
    return worst


def _check_inversion(ctx):
    worst = 0.0
    for _ in range(25):
        f = ctx.function()
        back = inverse_transform(forward_transform(f, ctx.dual))
        worst = max(worst, float(np.abs(back.values - f.values).max()))
    return worst


def _check_forward_constant(ctx):
    f = CosetFunction(ctx.space, np.ones(ctx.space.n_cosets))
    coeffs = forward_transform(f, ctx.dual)
    worst = 0.0
    for cls, block in zip(ctx.dual.classes, coeffs.blocks):
        if np.abs(cls.irrep.character - 1.0).max() < 1e-9:
            # trivial class: the block must be the projection itself
            worst = max(worst, float(np.abs(block - cls.projection).max()))
        else:
            worst = max(worst, float(np.abs(block).max()))
    return worst


def _check_forward_absorption(ctx):
    worst = 0.0
    for _ in range(5):
        coeffs = forward_transform(ctx.function(), ctx.dual)
        for cls, block in zip(ctx.dual.classes, coeffs.blocks):
            worst = max(worst, float(np.abs(cls.projection @ block - block).max()))
    return worst


def _check_forward_inverse_absorbed(ctx):
    blocks = tuple(ctx.rng.standard_normal((c.dim, c.dim))
                   + 1j * ctx.rng.standard_normal((c.dim, c.dim))
                   for c in ctx.dual.classes)
    back = forward_transform(
        inverse_transform(FourierCoefficients(ctx.dual, blocks)), ctx.dual)
    worst = 0.0
    for cls, orig, rt in zip(ctx.dual.classes, blocks, back.blocks):
        worst = max(worst, float(np.abs(rt - cls.projection @ orig).max()))
    return worst


def _quotient_cyclic_generator(ctx):
    """Coset index generating the quotient group, or None if not applicable."""
    if not is_normal(ctx.space):
        return None
    space = ctx.space
    group = space.group
    n = space.n_cosets
    for start in range(n):
        rep = space.representatives[start]
        seen = []
        g = group.identity
        for _ in range(n):
            g = group.mul(rep, g)
            seen.append(int(space.coset_of[g]))
        if len(set(seen)) == n:
            return start
    return None


def _check_classical_dft(ctx):
    gen = _quotient_cyclic_generator(ctx)
    if gen is None:
        return None
    space = ctx.space
    group = space.group
    n = space.n_cosets
    # order the cosets as powers of the generator
    power_of = {}
    g = group.identity
    rep = space.representatives[gen]
    for a in range(n):
        power_of[int(space.coset_of[g])] = a
        g = group.mul(rep, g)
    if any(cls.dim != 1 for cls in ctx.dual.classes):
        return None
    f = ctx.function()
    coeffs = forward_transform(f, ctx.dual)
    worst = 0.0
    for cls, block in zip(ctx.dual.classes, coeffs.blocks):
        # frequency of this character on the cyclic quotient
        val = cls.irrep.matrices[rep][0, 0]
        m = int(round(np.angle(val) * n / (2.0 * np.pi))) % n
        dft = 0.0
        for coset, a in power_of.items():
            dft += f.values[coset] * np.exp(-2j * np.pi * m * a / n)
        dft /= n
        worst = max(worst, abs(block[0, 0] - dft))
    return worst


def _check_quantize_roundtrip_operator(ctx):
    worst = 0.0
    for _ in range(10):
        op = random_operator(ctx.dual, ctx.rng)
        back = op_from_symbol(symbol_from_operator(op, ctx.dual))
        worst = max(worst, _rel(np.abs(back.kernel - op.kernel).max(),
                                np.abs(op.kernel).max()))
    return worst


def _check_quantize_roundtrip_symbol(ctx):
    worst = 0.0
    for _ in range(10):
        sigma = random_canonical_symbol(ctx.dual, ctx.rng)
        back = symbol_from_operator(op_from_symbol(sigma), ctx.dual)
        worst = max(worst, _block_diff(back, sigma))
    return worst


def _check_extraction_fixed_point(ctx):
    worst = 0.0
    for _ in range(5):
        sigma = symbol_from_operator(random_operator(ctx.dual, ctx.rng), ctx.dual)
        worst = max(worst, sigma.left_residual(), sigma.right_residual())
    return worst


def _check_apply_consistency(ctx):
    worst = 0.0
    for _ in range(5):
        sigma = random_canonical_symbol(ctx.dual, ctx.rng)
        f = ctx.function()
        via_kernel = apply_operator(op_from_symbol(sigma), f).values
        via_trace = apply_via_symbol(sigma, f).values
        worst = max(worst, _rel(np.abs(via_kernel - via_trace).max(),
                                max(np.abs(via_kernel).max(), 1.0)))
    return worst


def _check_quantize_linearity(ctx):
    s1 = random_canonical_symbol(ctx.dual, ctx.rng)
    s2 = random_canonical_symbol(ctx.dual, ctx.rng)
    a, b = 1.7 - 0.4j, -0.3 + 2.2j
    combo = MatrixSymbol(dual=ctx.dual, blocks=tuple(
        a * x + b * y for x, y in zip(s1.blocks, s2.blocks)))
    lhs = op_from_symbol(combo).kernel
    rhs = a * op_from_symbol(s1).kernel + b * op_from_symbol(s2).kernel
    return _rel(np.abs(lhs - rhs).max(), max(1.0, np.abs(rhs).max()))


# -- schatten suite -----------------------------------------------------------

def _check_hs_identity(ctx):
    worst = 0.0
    for _ in range(10):
        op = random_operator(ctx.dual, ctx.rng)
        lhs = hs_norm_via_symbol(symbol_from_operator(op, ctx.dual))
        rhs = schatten_norm(singular_values(op), 2.0)
        worst = max(worst, _rel(abs(lhs - rhs), rhs))
    return worst


def _check_kernel_l2_identity(ctx):
    worst = 0.0
    for _ in range(5):
        op = random_kernel_operator(ctx.space, ctx.rng)
        lhs = schatten_norm(singular_values(op), 2.0) ** 2
        rhs = float(np.sum(np.abs(ctx.space.weight * op.kernel) ** 2))
        worst = max(worst, _rel(abs(lhs - rhs), rhs))
    return worst


def _check_schatten_criterion(ctx):
    worst = 0.0
    for _ in range(3):
        op = random_operator(ctx.dual, ctx.rng)
        for r in (0.5, 1.0, 2.0, 3.0):
            worst = max(worst, schatten_criterion_check(op, ctx.dual, r).residual)
    return worst


def _check_power_identity(ctx):
    op = random_kernel_operator(ctx.space, ctx.rng)
    spec = singular_values(op)
    worst = 0.0
    for r in (0.5, 1.0, 3.0):
        for t in (1.0, 2.0):
            lhs = schatten_norm(spec, r) ** r
            rhs = schatten_norm(singular_values(fractional_modulus(op, r / t)), t) ** t
            worst = max(worst, _rel(abs(lhs - rhs), max(lhs, 1.0)))
    return worst


def _check_fractional_spectrum(ctx):
    op = random_kernel_operator(ctx.space, ctx.rng)
    base = singular_values(op).values
    worst = 0.0
    for s in (0.5, 2.0):
        left = singular_values(fractional_modulus(op, s)).values
        worst = max(worst, float(np.abs(left - base ** s).max()))
    return worst


def _check_unitary_invariance(ctx):
    op = random_operator(ctx.dual, ctx.rng)
    base = singular_values(op).values
    space = ctx.space
    group = ctx.entry.group
    n = space.n_cosets
    worst = 0.0
    for g in range(group.order):
        perm = np.zeros((n, n))
        for x in range(n):
            perm[space.coset_of[group.cayley[g, space.representatives[x]]], x] = 1.0
        moved = LinearOperator(space=space, kernel=n * perm @ op.matrix)
        worst = max(worst, float(np.abs(singular_values(moved).values - base).max()))
    return worst


def _check_schatten_monotone(ctx):
    spec = singular_values(random_kernel_operator(ctx.space, ctx.rng))
    grid = [0.5, 1.0, 2.0, 4.0, np.inf]
    vals = [schatten_norm(spec, r) for r in grid]
    return max(max(b - a for a, b in zip(vals, vals[1:])), 0.0)


# -- nuclear suite ------------------------------------------------------------

def _check_trace_three_way(ctx):
    worst = 0.0
    for _ in range(10):
        op = random_operator(ctx.dual, ctx.rng)
        rep = nuclearity_report(op, ctx.dual)
        worst = max(worst, rep.residual_symbol, rep.residual_eigen)
    return worst


def _check_factorization(ctx):
    worst = 0.0
    for _ in range(5):
        op = random_kernel_operator(ctx.space, ctx.rng)
        dec = kernel_factorization(op)
        worst = max(worst, _rel(np.abs(dec.reconstruct().kernel - op.kernel).max(),
                                max(1.0, np.abs(op.kernel).max())))
    return worst


def _check_symbol_from_decomposition(ctx):
    worst = 0.0
    for _ in range(5):
        op = random_kernel_operator(ctx.space, ctx.rng)
        dec = kernel_factorization(op)
        worst = max(worst, _block_diff(symbol_from_decomposition(dec, ctx.dual),
                                       symbol_from_operator(op, ctx.dual)))
    return worst


def _check_kernel_bilinear(ctx):
    worst = 0.0
    for _ in range(5):
        op = random_operator(ctx.dual, ctx.rng)
        dec = kernel_factorization(op)
        sigma = symbol_from_operator(op, ctx.dual)
        lhs = op_from_symbol(sigma).kernel
        rhs = dec.reconstruct().kernel
        worst = max(worst, _rel(np.abs(lhs - rhs).max(),
                                max(1.0, np.abs(rhs).max())))
    return worst


def _check_adjoint_pairing(ctx):
    worst = 0.0
    for _ in range(5):
        op = random_kernel_operator(ctx.space, ctx.rng)
        adj = adjoint_operator(op)
        f, g = ctx.function(), ctx.function()
        lhs = l2_inner(apply_operator(op, f), g)
        rhs = l2_inner(f, apply_operator(adj, g))
        worst = max(worst, _rel(abs(lhs - rhs), max(1.0, abs(lhs))))
    return worst


def _check_adjoint_decomposition(ctx):
    worst = 0.0
    for _ in range(5):
        op = random_kernel_operator(ctx.space, ctx.rng)
        tau = adjoint_symbol_via_decomposition(kernel_factorization(op), ctx.dual)
        direct = symbol_from_operator(adjoint_operator(op), ctx.dual)
        worst = max(worst, _block_diff(tau, direct))
    return worst


def _check_adjoint_resummation(ctx):
    worst = 0.0
    for _ in range(5):
        sigma = random_canonical_symbol(ctx.dual, ctx.rng)
        tau = adjoint_symbol_via_resummation(sigma)
        direct = symbol_from_operator(
            adjoint_operator(op_from_symbol(sigma)), ctx.dual)
        worst = max(worst, _block_diff(tau, direct))
    return worst


def _check_self_adjointness(ctx):
    mismatches = 0
    for _ in range(20):
        a = random_kernel_operator(ctx.space, ctx.rng).kernel
        herm = LinearOperator(space=ctx.space, kernel=a + a.conj().T)
        ok, _ = self_adjointness_check(herm, ctx.dual)
        hermitian_truth = np.abs(herm.kernel - herm.kernel.conj().T).max() < 1e-12
        mismatches += (ok != hermitian_truth)
        asym = LinearOperator(space=ctx.space, kernel=a - a.conj().T)
        ok, _ = self_adjointness_check(asym, ctx.dual)
        hermitian_truth = np.abs(asym.kernel - asym.kernel.conj().T).max() < 1e-12
        mismatches += (ok != hermitian_truth)
    return float(mismatches)


def _check_product_composition(ctx):
    worst = 0.0
    for _ in range(5):
        sigma_s = random_canonical_symbol(ctx.dual, ctx.rng)
        t_op = random_convolution_operator(ctx.dual, ctx.rng)
        lam = product_symbol(sigma_s, kernel_factorization(t_op))
        st = compose(op_from_symbol(sigma_s), t_op)
        worst = max(worst, _rel(np.abs(op_from_symbol(lam).kernel - st.kernel).max(),
                                max(1.0, np.abs(st.kernel).max())))
    return worst


def _check_functional_homogeneity(ctx):
    worst = 0.0
    for c, r in ((3.0, 1.0), (3.0, 0.5)):
        sigma = random_canonical_symbol(ctx.dual, ctx.rng)
        scaled = MatrixSymbol(dual=ctx.dual,
                              blocks=tuple(c * b for b in sigma.blocks))
        lhs = sufficiency_functional(scaled, r, 2.0, 2.0)
        rhs = abs(c) ** r * sufficiency_functional(sigma, r, 2.0, 2.0)
        worst = max(worst, _rel(abs(lhs - rhs), max(1.0, rhs)))
    return worst


# -- heat suite ----------------------------------------------------------------

def _check_laplacian_schur(ctx):
    worst = 0.0
    lap = ctx.laplacian
    for rho in ctx.entry.irreps:
        acc = sum((rho.matrices[s] for s in lap.generators),
                  start=np.zeros((rho.dim, rho.dim), dtype=complex))
        scalar = (sum(rho.character[s] for s in lap.generators) / rho.dim
                  if lap.generators else 0.0)
        worst = max(worst, float(np.abs(acc - scalar * np.eye(rho.dim)).max()))
    return worst


def _check_descend_lift(ctx):
    from .heat import group_laplacian_matrix
    f = random_coset_function_values(ctx.space, ctx.rng)
    lifted = f[ctx.space.coset_of]
    lifted_out = group_laplacian_matrix(ctx.laplacian) @ lifted
    descended_out = descend_laplacian(ctx.laplacian, ctx.space).matrix @ f
    return float(np.abs(lifted_out - descended_out[ctx.space.coset_of]).max())


def _check_descend_eigenfunctions(ctx):
    m = descend_laplacian(ctx.laplacian, ctx.space).matrix
    worst = 0.0
    for cls in ctx.dual.classes:
        lam = ctx.laplacian.eigenvalues[cls.label]
        for a in range(cls.dim):
            for b in range(cls.rank):
                func = cls.gammas[:, a, b]
                worst = max(worst, float(np.abs(m @ func - lam * func).max()))
    return worst


def _check_heat_vs_expm(ctx):
    m = descend_laplacian(ctx.laplacian, ctx.space).matrix
    w, v = hermitian_eigh(m)
    worst = 0.0
    for t in np.linspace(0.0, 2.0, 9):
        oracle = (v * np.exp(-t * w)) @ v.conj().T
        quantized = heat_operator(ctx.laplacian, ctx.dual, t).matrix
        worst = max(worst, _rel(np.abs(quantized - oracle).max(),
                                max(1.0, np.abs(oracle).max())))
    return worst


def _check_heat_trace_three_way(ctx):
    worst = 0.0
    for t in (0.0, 0.1, 0.5, 1.0, 2.0):
        formula = heat_trace(ctx.laplacian, ctx.dual, t)
        oracle = heat_trace_oracle(ctx.laplacian, ctx.space, t)
        sym = nuclear_trace_via_symbol(heat_symbol(ctx.laplacian, ctx.dual, t).symbol)
        ker = kernel_diagonal_trace(heat_operator(ctx.laplacian, ctx.dual, t))
        for other in (oracle, sym.real, ker.real):
            worst = max(worst, _rel(abs(formula - other), max(1.0, formula)))
    return worst


def _check_heat_t0(ctx):
    return abs(heat_trace(ctx.laplacian, ctx.dual, 0.0) - ctx.space.n_cosets)


def _check_heat_semigroup(ctx):
    worst = 0.0
    for t1, t2 in ((0.1, 0.2), (0.5, 0.5), (0.0, 0.7)):
        combined = compose(heat_operator(ctx.laplacian, ctx.dual, t1),
                           heat_operator(ctx.laplacian, ctx.dual, t2)).kernel
        direct = heat_operator(ctx.laplacian, ctx.dual, t1 + t2).kernel
        worst = max(worst, _rel(np.abs(combined - direct).max(),
                                max(1.0, np.abs(direct).max())))
    return worst


def _check_heat_contraction(ctx):
    worst = 0.0
    for t in (0.1, 1.0):
        w, _ = hermitian_eigh(heat_operator(ctx.laplacian, ctx.dual, t).matrix)
        worst = max(worst, float(w.max() - 1.0), float(-w.min()))
    return max(worst, 0.0)


def _check_heat_monotone(ctx):
    ts = np.linspace(0.0, 2.0, 11)
    vals = [heat_trace(ctx.laplacian, ctx.dual, t) for t in ts]
    worst = max(max(b - a for a, b in zip(vals, vals[1:])), 0.0)
    worst = max(worst, max(1.0 - v for v in vals))
    return max(worst, 0.0)


def _check_heat_functional_decreasing(ctx):
    vals = [sufficiency_functional(heat_symbol(ctx.laplacian, ctx.dual, t).symbol,
                                   1.0, 2.0, 2.0)
            for t in (0.0, 0.5, 1.0, 2.0)]
    if not all(np.isfinite(vals)):
        return np.inf
    return max(max(b - a for a, b in zip(vals, vals[1:])), 0.0)


CHECKS = (
    ("projection-invariants", "fourier", 1e-12, _check_projection_invariants),
    ("coefficient-gram", "fourier", 1e-10, _check_coefficient_gram),
    ("dimension-identity", "fourier", 1e-9, _check_dimension_identity),
    ("coefficient-entry-bounds", "fourier", 1e-12, _check_entry_bounds),
    ("weil-formula", "fourier", 1e-12, _check_weil_formula),
    ("plancherel", "fourier", 1e-12, _check_plancherel),
    ("inversion-roundtrip", "fourier", 1e-11, _check_inversion),
    ("forward-constant", "fourier", 1e-13, _check_forward_constant),
    ("forward-absorption", "fourier", 1e-12, _check_forward_absorption),
    ("forward-inverse-absorbed", "fourier", 1e-11, _check_forward_inverse_absorbed),
    ("classical-dft", "fourier", 1e-12, _check_classical_dft),
    ("quantize-roundtrip-operator", "fourier", 1e-10, _check_quantize_roundtrip_operator),
    ("quantize-roundtrip-symbol", "fourier", 1e-10, _check_quantize_roundtrip_symbol),
    ("extraction-fixed-point", "fourier", 1e-11, _check_extraction_fixed_point),
    ("apply-consistency", "fourier", 1e-12, _check_apply_consistency),
    ("quantize-linearity", "fourier", 1e-11, _check_quantize_linearity),
    ("hs-identity", "schatten", 1e-10, _check_hs_identity),
    ("kernel-l2-identity", "schatten", 1e-12, _check_kernel_l2_identity),
    ("schatten-criterion", "schatten", 1e-9, _check_schatten_criterion),
    ("power-identity", "schatten", 1e-9, _check_power_identity),
    ("fractional-spectrum", "schatten", 1e-11, _check_fractional_spectrum),
    ("unitary-invariance", "schatten", 1e-11, _check_unitary_invariance),
    ("schatten-monotone", "schatten", 1e-12, _check_schatten_monotone),
    ("trace-three-way", "nuclear", 1e-10, _check_trace_three_way),
    ("factorization-reconstruction", "nuclear", 1e-11, _check_factorization),
    ("symbol-from-decomposition", "nuclear", 1e-10, _check_symbol_from_decomposition),
    ("kernel-bilinear-identity", "nuclear", 1e-10, _check_kernel_bilinear),
    ("adjoint-pairing", "nuclear", 1e-12, _check_adjoint_pairing),
    ("adjoint-via-decomposition", "nuclear", 1e-9, _check_adjoint_decomposition),
    ("adjoint-via-resummation", "nuclear", 1e-9, _check_adjoint_resummation),
    ("self-adjointness", "nuclear", 0.5, _check_self_adjointness),
    ("product-composition", "nuclear", 1e-9, _check_product_composition),
    ("functional-homogeneity", "nuclear", 1e-12, _check_functional_homogeneity),
    ("laplacian-schur-scalars", "heat", 1e-11, _check_laplacian_schur),
    ("descend-lift-consistency", "heat", 1e-12, _check_descend_lift),
    ("descend-eigenfunctions", "heat", 1e-11, _check_descend_eigenfunctions),
    ("heat-vs-expm", "heat", 1e-10, _check_heat_vs_expm),
    ("heat-trace-three-way", "heat", 1e-10, _check_heat_trace_three_way),
    ("heat-t0-dimension", "heat", 1e-12, _check_heat_t0),
    ("heat-semigroup", "heat", 1e-10, _check_heat_semigroup),
    ("heat-contraction", "heat", 1e-12, _check_heat_contraction),
    ("heat-trace-monotone", "heat", 1e-12, _check_heat_monotone),
    ("heat-functional-decreasing", "heat", 1e-12, _check_heat_functional_decreasing),
)


def run_suite(group_name, subgroup_name, suite="all", tol=None, seed=0):
    """Run one suite (or all) for a pair; returns a VerificationReport."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    entry = load_entry(group_name)
    ctx = _Context(entry, subgroup_name, seed)
    checks = []
    for check_id, check_suite, default_tol, fn in CHECKS:
        if suite != "all" and check_suite != suite:
            continue
        tolerance = tol if tol is not None else default_tol
        started = time.perf_counter()
        residual = fn(ctx)
        elapsed = time.perf_counter() - started
        if residual is None:
            continue       # check not applicable to this pair
        checks.append(CheckResult(
            check_id=check_id, suite=check_suite,
            group=group_name, subgroup=subgroup_name,
            max_residual=float(residual), tolerance=float(tolerance),
            passed=bool(residual <= tolerance), seconds=elapsed))
    return VerificationReport(suite=suite, group=group_name,
                              subgroup=subgroup_name, seed=seed, checks=checks)
