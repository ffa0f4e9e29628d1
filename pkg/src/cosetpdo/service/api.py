"""Shared operation layer: every CLI command and HTTP endpoint calls these.

Functions return pydantic models; failures raise ApiError with a code that
the CLI maps to exit statuses and the HTTP layer maps to response codes.
"""

import numpy as np

from ..catalog import (UnknownGroupError, available_groups, load_entry,
                       resolve_subgroup)
from ..fourier import CosetFunction, forward_transform, inverse_transform
from ..groups import GroupError, coset_space, dual_object
from ..heat import (heat_trace, heat_trace_oracle, laplacian_from_generators)
from ..nuclear import nuclearity_report
from ..quantize import symbol_from_operator
from ..sampling import (random_convolution_operator, random_kernel_operator,
                        random_operator, rng_from_seed)
from ..schatten import schatten_criterion_check
from ..serialize import (cmatrix_to_json, complex_to_pair, cvector_to_json,
                         json_to_cmatrix, load_group_document,
                         pair_to_complex)
from ..verify import run_suite
from . import schemas


class ApiError(Exception):
    """code: 'not_found' or 'bad_request'."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
        self.message = message


def _entry(name):
    try:
        return load_entry(name)
    except UnknownGroupError as exc:
        raise ApiError("not_found", str(exc)) from exc


def _pair(group_name, subgroup_name):
    entry = _entry(group_name)
    try:
        sub = resolve_subgroup(entry, subgroup_name)
    except UnknownGroupError as exc:
        raise ApiError("not_found", str(exc)) from exc
    space = coset_space(entry.group, sub)
    dual = dual_object(space, entry.irreps)
    return entry, space, dual


def list_groups():
    groups = []
    for name in available_groups():
        entry = load_entry(name)
        groups.append(schemas.GroupSummary(
            name=name, order=entry.group.order,
            subgroups=list(entry.subgroups),
            irrep_dims=[r.dim for r in entry.irreps]))
    return schemas.GroupListResponse(groups=groups)


def show_group(name):
    entry = _entry(name)
    return schemas.GroupDetail(
        name=entry.group.name, order=entry.group.order,
        subgroups={k: list(v.elements) for k, v in entry.subgroups.items()},
        irreps=[schemas.IrrepInfo(
            label=r.label, dim=r.dim,
            character=[complex_to_pair(z) for z in r.character])
            for r in entry.irreps],
        laplacian_generators=list(entry.laplacian_generators))


def validate_group_document(doc):
    try:
        entry = load_group_document(doc)
    except (GroupError, KeyError, TypeError, ValueError) as exc:
        raise ApiError("bad_request", f"invalid group document: {exc}") from exc
    return schemas.GroupDocumentReport(
        name=entry.group.name, order=entry.group.order,
        n_subgroups=len(entry.subgroups), n_irreps=len(entry.irreps))


def _operator_from_spec(spec, space, dual):
    if spec.kernel is not None and spec.seed is not None:
        raise ApiError("bad_request", "give either a kernel or a seed, not both")
    if spec.kernel is not None:
        try:
            kernel = json_to_cmatrix(spec.kernel)
        except (GroupError, ValueError, TypeError) as exc:
            raise ApiError("bad_request", f"malformed kernel: {exc}") from exc
        n = space.n_cosets
        if kernel.shape != (n, n):
            raise ApiError("bad_request",
                           f"kernel is {kernel.shape}, expected ({n}, {n})")
        from ..quantize import LinearOperator
        return LinearOperator(space=space, kernel=kernel)
    if spec.seed is None:
        raise ApiError("bad_request", "operator needs a kernel or a random seed")
    rng = rng_from_seed(spec.seed)
    if spec.random_kind == "pdo":
        return random_operator(dual, rng)
    if spec.random_kind == "convolution":
        return random_convolution_operator(dual, rng)
    return random_kernel_operator(space, rng)


def transform_forward(req):
    _, space, dual = _pair(req.group, req.subgroup)
    if len(req.values) != space.n_cosets:
        raise ApiError("bad_request",
                       f"expected {space.n_cosets} values, got {len(req.values)}")
    f = CosetFunction(space, np.array([pair_to_complex(v) for v in req.values]))
    coeffs = forward_transform(f, dual)
    return schemas.TransformForwardResponse(classes=[
        schemas.CoefficientBlock(label=cls.label, dim=cls.dim,
                                 matrix=cmatrix_to_json(block))
        for cls, block in zip(dual.classes, coeffs.blocks)])


def transform_inverse(req):
    _, space, dual = _pair(req.group, req.subgroup)
    by_label = {blk.label: blk for blk in req.classes}
    blocks = []
    for cls in dual.classes:
        if cls.label not in by_label:
            raise ApiError("bad_request", f"missing block for class {cls.label!r}")
        block = json_to_cmatrix(by_label[cls.label].matrix)
        if block.shape != (cls.dim, cls.dim):
            raise ApiError("bad_request", f"block for {cls.label} has wrong shape")
        blocks.append(block)
    from ..fourier import FourierCoefficients
    f = inverse_transform(FourierCoefficients(dual=dual, blocks=tuple(blocks)))
    return schemas.TransformInverseResponse(values=cvector_to_json(f.values))


def symbol_dump(spec):
    _, space, dual = _pair(spec.group, spec.subgroup)
    op = _operator_from_spec(spec, space, dual)
    sigma = symbol_from_operator(op, dual)
    return schemas.SymbolDumpResponse(
        group=spec.group, subgroup=spec.subgroup, n_cosets=space.n_cosets,
        classes=[schemas.SymbolClassBlocks(
            label=cls.label, dim=cls.dim, projection_rank=cls.rank,
            blocks=[cmatrix_to_json(b) for b in blk])
            for cls, blk in zip(dual.classes, sigma.blocks)],
        consistency_residual=sigma.left_residual())


def schatten_report(req):
    _, space, dual = _pair(req.group, req.subgroup)
    op = _operator_from_spec(req, space, dual)
    if req.r <= 0.0:
        raise ApiError("bad_request", "r must be positive")
    rep = schatten_criterion_check(op, dual, req.r)
    return schemas.SchattenResponse(r=rep.r, quasi_norm=rep.quasi_norm,
                                    symbol_side=rep.symbol_side,
                                    residual=rep.residual)


def trace_report(spec):
    _, space, dual = _pair(spec.group, spec.subgroup)
    op = _operator_from_spec(spec, space, dual)
    rep = nuclearity_report(op, dual)
    return schemas.TraceResponse(
        trace_kernel=complex_to_pair(rep.trace_kernel),
        trace_symbol=complex_to_pair(rep.trace_symbol),
        trace_eigen=complex_to_pair(rep.trace_eigen),
        residual_symbol=rep.residual_symbol,
        residual_eigen=rep.residual_eigen)


def nuclearity(req):
    _, space, dual = _pair(req.group, req.subgroup)
    op = _operator_from_spec(req, space, dual)
    try:
        rep = nuclearity_report(op, dual, r=req.r, p1=req.p1, p2=req.p2)
    except ValueError as exc:
        raise ApiError("bad_request", str(exc)) from exc
    return schemas.NuclearityResponse(
        r=rep.r, p1=rep.p1, p2=rep.p2,
        functional=rep.functional, cost=rep.cost,
        trace_kernel=complex_to_pair(rep.trace_kernel),
        trace_symbol=complex_to_pair(rep.trace_symbol),
        trace_eigen=complex_to_pair(rep.trace_eigen),
        residual_symbol=rep.residual_symbol,
        residual_eigen=rep.residual_eigen)


def heat_trace_sweep(req):
    entry, space, dual = _pair(req.group, req.subgroup)
    if req.steps < 1:
        raise ApiError("bad_request", "steps must be >= 1")
    if req.tmin < 0.0 or req.tmax < req.tmin:
        raise ApiError("bad_request", "need 0 <= tmin <= tmax")
    generators = (tuple(req.generators) if req.generators is not None
                  else entry.laplacian_generators)
    try:
        lap = laplacian_from_generators(entry.group, generators, entry.irreps)
    except GroupError as exc:
        raise ApiError("bad_request", str(exc)) from exc
    ts = np.linspace(req.tmin, req.tmax, req.steps)
    rows = []
    for t in ts:
        formula = heat_trace(lap, dual, float(t))
        oracle = heat_trace_oracle(lap, space, float(t))
        rows.append(schemas.HeatTraceRow(
            t=float(t), trace_formula=formula, trace_oracle=oracle,
            residual=abs(formula - oracle) / max(1.0, abs(formula))))
    return schemas.HeatTraceResponse(group=req.group, subgroup=req.subgroup,
                                     generators=list(generators), rows=rows)


def verify(req):
    try:
        report = run_suite(req.group, req.subgroup, suite=req.suite,
                           tol=req.tol, seed=req.seed)
    except UnknownGroupError as exc:
        raise ApiError("not_found", str(exc)) from exc
    except ValueError as exc:
        raise ApiError("bad_request", str(exc)) from exc
    return schemas.VerifyResponse(
        group=report.group, subgroup=report.subgroup, suite=report.suite,
        seed=report.seed, passed=report.passed,
        n_passed=report.n_passed, n_failed=report.n_failed,
        checks=[schemas.CheckRecord(
            check_id=c.check_id, suite=c.suite, max_residual=c.max_residual,
            tolerance=c.tolerance, passed=c.passed) for c in report.checks])
