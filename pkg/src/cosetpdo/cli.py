"""Command-line client for the calculus; a thin layer over the service api.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Structured output (--format json, and the heat-trace CSV) is byte-identical
for identical invocations; human tables may include timing diagnostics.
"""

import argparse
import json
import sys

from .sampling import GENERATOR_NAME
from .service import api
from .service.schemas import (HeatTraceRequest, NuclearityRequest,
                              OperatorSpec, SchattenRequest,
                              TransformForwardRequest, TransformInverseRequest,
                              VerifyRequest)


def _fail(message, code=2):
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit_json(model):
    print(model.model_dump_json(indent=2))


def _read_json(path):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _operator_args(parser):
    parser.add_argument("--group", required=True)
    parser.add_argument("--subgroup", required=True)
    parser.add_argument("--kernel", metavar="FILE",
                        help="kernel document {size, kernel} ('-' for stdin)")
    parser.add_argument("--random", action="store_true",
                        help="draw a seeded random operator instead")
    parser.add_argument("--seed", type=int, default=0,
                        help=f"seed for the named generator ({GENERATOR_NAME})")
    parser.add_argument("--random-kind", default="pdo",
                        choices=("pdo", "convolution", "kernel"),
                        help="random class: quantized symbol (pdo, default), "
                             "coset-independent symbol, or raw Gaussian kernel")


def _operator_spec(args, cls=OperatorSpec, **extra):
    if args.kernel and args.random:
        raise api.ApiError("bad_request", "--kernel and --random are exclusive")
    if args.kernel:
        try:
            doc = _read_json(args.kernel)
        except (OSError, json.JSONDecodeError) as exc:
            raise api.ApiError("bad_request", f"cannot read kernel file: {exc}")
        if not isinstance(doc, dict) or "kernel" not in doc:
            raise api.ApiError("bad_request", "kernel document must carry 'kernel'")
        return cls(group=args.group, subgroup=args.subgroup,
                   kernel=doc["kernel"], **extra)
    if not args.random:
        raise api.ApiError("bad_request", "give --kernel FILE or --random")
    return cls(group=args.group, subgroup=args.subgroup, seed=args.seed,
               random_kind=args.random_kind, **extra)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cosetpdo",
        description="Fourier calculus and operator trace identities on "
                    "quotients of finite groups")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("groups", help="inspect the group catalog")
    gsub = p.add_subparsers(dest="groups_command", required=True)
    gsub.add_parser("list", help="list built-in groups")
    show = gsub.add_parser("show", help="show one group")
    show.add_argument("name")
    load = gsub.add_parser("load", help="validate a group document file")
    load.add_argument("path")

    p = sub.add_parser("verify", help="run identity suites for one pair")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--suite", default="all",
                   choices=("all", "fourier", "schatten", "nuclear", "heat"))
    p.add_argument("--tol", type=float, default=None,
                   help="override every check tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", default="human", choices=("human", "json"))

    p = sub.add_parser("heat-trace", help="heat trace sweep, CSV output")
    p.add_argument("--group", required=True)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--tmin", type=float, default=0.0)
    p.add_argument("--tmax", type=float, default=2.0)
    p.add_argument("--steps", type=int, default=9)
    p.add_argument("--generators", type=int, nargs="+", default=None,
                   help="element indices of a symmetric conjugation-closed set")
    p.add_argument("--format", default="csv", choices=("csv", "json"))

    p = sub.add_parser("schatten", help="Schatten criterion report")
    _operator_args(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--format", default="human", choices=("human", "json"))

    p = sub.add_parser("trace", help="three-way nuclear trace report")
    _operator_args(p)
    p.add_argument("--format", default="human", choices=("human", "json"))

    p = sub.add_parser("nuclearity", help="sufficiency functional and cost")
    _operator_args(p)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--p1", type=float, default=2.0)
    p.add_argument("--p2", type=float, default=2.0)
    p.add_argument("--format", default="human", choices=("human", "json"))

    p = sub.add_parser("symbol", help="symbol utilities")
    ssub = p.add_subparsers(dest="symbol_command", required=True)
    dump = ssub.add_parser("dump", help="extract and print an operator symbol")
    _operator_args(dump)
    dump.add_argument("--format", default="human", choices=("human", "json"))

    p = sub.add_parser("transform", help="forward/inverse transforms")
    tsub = p.add_subparsers(dest="transform_command", required=True)
    fwd = tsub.add_parser("forward")
    fwd.add_argument("--group", required=True)
    fwd.add_argument("--subgroup", required=True)
    fwd.add_argument("--input", default="-",
                     help="function document {values} ('-' for stdin)")
    inv = tsub.add_parser("inverse")
    inv.add_argument("--group", required=True)
    inv.add_argument("--subgroup", required=True)
    inv.add_argument("--input", default="-",
                     help="coefficient document {classes} ('-' for stdin)")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _cmd_groups(args):
    if args.groups_command == "list":
        resp = api.list_groups()
        print(f"{'name':8s} {'order':>5s}  {'irrep dims':20s} subgroups")
        for g in resp.groups:
            dims = ",".join(str(d) for d in g.irrep_dims)
            print(f"{g.name:8s} {g.order:5d}  {dims:20s} {', '.join(g.subgroups)}")
        return 0
    if args.groups_command == "show":
        detail = api.show_group(args.name)
        print(f"group {detail.name}: order {detail.order}, "
              f"cayley {detail.order}x{detail.order}")
        print("subgroups: " + ", ".join(
            f"{k}({len(v)})" for k, v in detail.subgroups.items()))
        print("default laplacian generators: "
              + " ".join(str(s) for s in detail.laplacian_generators))
        print(f"{'irrep':12s} {'dim':>3s}  character")
        for rho in detail.irreps:
            chars = " ".join(
                f"{re:+.3f}" if abs(im) < 1e-12 else f"{re:+.3f}{im:+.3f}j"
                for re, im in rho.character)
            print(f"{rho.label:12s} {rho.dim:3d}  {chars}")
        return 0
    try:
        doc = _read_json(args.path)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot read group document: {exc}")
    report = api.validate_group_document(doc)
    print(f"ok: group {report.name}, order {report.order}, "
          f"{report.n_subgroups} subgroups, {report.n_irreps} irreps")
    return 0


def _cmd_verify(args):
    req = VerifyRequest(group=args.group, subgroup=args.subgroup,
                        suite=args.suite, tol=args.tol, seed=args.seed)
    resp = api.verify(req)
    if args.format == "json":
        _emit_json(resp)
    else:
        print(f"verify {resp.group}/{resp.subgroup} suite={resp.suite} "
              f"seed={resp.seed}")
        print(f"{'check':32s} {'suite':9s} {'residual':>12s} {'tol':>8s} status")
        for c in resp.checks:
            status = "pass" if c.passed else "FAIL"
            print(f"{c.check_id:32s} {c.suite:9s} {c.max_residual:12.3e} "
                  f"{c.tolerance:8.0e} {status}")
        print(f"summary: {resp.n_passed} passed, {resp.n_failed} failed")
    if not resp.passed:
        worst = max((c for c in resp.checks if not c.passed),
                    key=lambda c: c.max_residual / max(c.tolerance, 1e-300))
        print(f"worst offender: {worst.check_id} "
              f"(residual {worst.max_residual:.3e} vs tol {worst.tolerance:.0e})",
              file=sys.stderr)
        return 1
    return 0


def _cmd_heat_trace(args):
    req = HeatTraceRequest(group=args.group, subgroup=args.subgroup,
                           tmin=args.tmin, tmax=args.tmax, steps=args.steps,
                           generators=args.generators)
    resp = api.heat_trace_sweep(req)
    if args.format == "json":
        _emit_json(resp)
        return 0
    print("t,trace_formula,trace_oracle,residual")
    for row in resp.rows:
        print(f"{row.t:.17g},{row.trace_formula:.17g},"
              f"{row.trace_oracle:.17g},{row.residual:.3e}")
    return 0


def _cmd_schatten(args):
    req = _operator_spec(args, SchattenRequest, r=args.r)
    resp = api.schatten_report(req)
    if args.format == "json":
        _emit_json(resp)
        return 0
    print(f"schatten r={resp.r:g}")
    print(f"  quasi-norm   {resp.quasi_norm:.12e}")
    print(f"  symbol side  {resp.symbol_side:.12e}")
    print(f"  residual     {resp.residual:.3e}")
    return 0


def _cmd_trace(args):
    resp = api.trace_report(_operator_spec(args))
    if args.format == "json":
        _emit_json(resp)
        return 0
    for name, val in (("kernel diagonal", resp.trace_kernel),
                      ("symbol formula", resp.trace_symbol),
                      ("eigenvalue sum", resp.trace_eigen)):
        print(f"  trace via {name:16s} {val[0]:+.12e} {val[1]:+.12e}j")
    print(f"  residual symbol {resp.residual_symbol:.3e}  "
          f"eigen {resp.residual_eigen:.3e}")
    return 0


def _cmd_nuclearity(args):
    req = _operator_spec(args, NuclearityRequest, r=args.r, p1=args.p1, p2=args.p2)
    resp = api.nuclearity(req)
    if args.format == "json":
        _emit_json(resp)
        return 0
    print(f"nuclearity r={resp.r:g} p1={resp.p1:g} p2={resp.p2:g}")
    print(f"  sufficiency functional  {resp.functional:.12e}")
    print(f"  decomposition cost      {resp.cost:.12e}")
    print(f"  trace (kernel)          {resp.trace_kernel[0]:+.12e} "
          f"{resp.trace_kernel[1]:+.12e}j")
    return 0


def _cmd_symbol(args):
    resp = api.symbol_dump(_operator_spec(args))
    if args.format == "json":
        _emit_json(resp)
        return 0
    print(f"symbol on {resp.group}/{resp.subgroup}: {resp.n_cosets} cosets, "
          f"{len(resp.classes)} classes")
    print(f"consistency residual {resp.consistency_residual:.3e}")
    for cls in resp.classes:
        print(f"class {cls.label} (dim {cls.dim}, rank {cls.projection_rank})")
        for x, block in enumerate(cls.blocks):
            rows = ["  ".join(f"{re:+.6f}{im:+.6f}j" for re, im in row)
                    for row in block]
            print(f"  coset {x}: " + " | ".join(rows))
    return 0


def _cmd_transform(args):
    try:
        doc = _read_json(args.input)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot read input: {exc}")
    if args.transform_command == "forward":
        if not isinstance(doc, dict) or "values" not in doc:
            return _fail("input must carry 'values'")
        req = TransformForwardRequest(group=args.group, subgroup=args.subgroup,
                                      values=doc["values"])
        _emit_json(api.transform_forward(req))
    else:
        if not isinstance(doc, dict) or "classes" not in doc:
            return _fail("input must carry 'classes'")
        req = TransformInverseRequest(group=args.group, subgroup=args.subgroup,
                                      classes=doc["classes"])
        _emit_json(api.transform_inverse(req))
    return 0


def _cmd_serve(args):
    import uvicorn

    from .service.app import app
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {
        "groups": _cmd_groups,
        "verify": _cmd_verify,
        "heat-trace": _cmd_heat_trace,
        "schatten": _cmd_schatten,
        "trace": _cmd_trace,
        "nuclearity": _cmd_nuclearity,
        "symbol": _cmd_symbol,
        "transform": _cmd_transform,
        "serve": _cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except api.ApiError as exc:
        return _fail(exc.message)


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
