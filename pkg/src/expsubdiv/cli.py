"""Command-line entry point.

Subcommands::

    identities  certify the Chebyshev / q-series identities
    symbol      dump a level symbol as JSON
    compare     closed-form symbol against the Hurwitz-matrix construction
    subdivide   refine a preset or CSV polygon, optionally drawing an SVG
    dd-limit    distance to the Dubuc-Deslauriers symbol as v -> 1
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import certify
from .curves import CurveSpec, default_point_count, generate
from .errors import (
    DegenerateParameterError,
    DomainError,
    NonTerminatingSeriesError,
    SingularMatrixError,
    SingularParameterError,
    UnsupportedBoundaryError,
)
from .oracle import oracle_symbol
from .scalar import format_scalar, parse_scalar
from .subdivision import SchemeParams, level_masks, read_csv, refine_once, write_csv
from .svg import write_svg
from .symbols import ThetaSpec, closed_form_symbol, dd_symbol, interpolatory_symbol, level_param

MODULE_ERRORS = (
    DegenerateParameterError,
    DomainError,
    NonTerminatingSeriesError,
    SingularMatrixError,
    SingularParameterError,
    UnsupportedBoundaryError,
    ValueError,
    OSError,
)

PRESET_DEFAULT_NU = {
    "star2d": (4,),
    "star3d": (3,),
    "lissajous2d": (3, 4),
    "lissajous3d": (4, 2, 5),
    "lissajous-sphere": (4, 1),
}


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _scalar_list(text: str, exact: bool) -> list:
    return [parse_scalar(part, exact) for part in text.split(",") if part.strip()]


def _int_list(text: str) -> tuple:
    return tuple(int(part) for part in text.split(",") if part.strip())


# identities


def cmd_identities(args) -> int:
    exact = args.arithmetic == "rational"
    ts = _scalar_list(args.t, exact) if args.t else list(certify.DEFAULT_T)
    if not exact:
        ts = [float(t) for t in ts]
    results = certify.run_all(args.n_max, ts, args.count, args.seed)

    ok = True
    lines = []
    report = []
    for name, records in results.items():
        passed = all(r.passed(args.tol) for r in records)
        ok &= passed
        worst = max((r.residual for r in records), default=0.0)
        status = "PASS" if passed else "FAIL"
        if exact:
            lines.append(f"{name:14s} {status}  ({len(records)} instances)")
        else:
            lines.append(f"{name:14s} {status}  max residual {worst:.3e}  ({len(records)} instances)")
        report.extend(r.to_json_obj(args.tol) for r in records)
    _emit(args, {"pass": ok, "records": report}, "\n".join(lines))
    return 0 if ok else 1


# symbol


def _level_v(args):
    if args.v is not None:
        return parse_scalar(args.v, exact=args.arithmetic == "rational")
    if args.theta is not None:
        theta = ThetaSpec.zero() if args.theta == 0 else ThetaSpec.trigonometric(args.theta)
    else:
        theta = ThetaSpec.hyperbolic(args.hyperbolic)
    return level_param(theta, args.k).v


def cmd_symbol(args) -> int:
    v = _level_v(args)
    mask = interpolatory_symbol(args.n, v)
    text = json.dumps(mask.to_json_obj())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0


# compare


def cmd_compare(args) -> int:
    exact = args.arithmetic == "rational"
    v = parse_scalar(args.v, exact)
    closed = closed_form_symbol(args.n, v).symbol
    oracle = oracle_symbol(args.n, v).symbol
    deviation = closed.max_abs_diff(oracle)
    passed = closed == oracle if exact else deviation <= args.tol
    lo = -(2 * args.n + 1)
    exps = range(lo, -lo + 1)
    closed_vec = [format_scalar(closed.coeff(j)) for j in exps]
    oracle_vec = [format_scalar(oracle.coeff(j)) for j in exps]
    payload = {
        "n": args.n,
        "v": format_scalar(v),
        "lo": lo,
        "closed_form": closed_vec,
        "oracle": oracle_vec,
        "max_deviation": deviation,
        "pass": passed,
    }
    text = "\n".join(
        [
            f"exponents    {lo} .. {-lo}",
            f"closed form  {closed_vec}",
            f"oracle       {oracle_vec}",
            f"max deviation {deviation:.3e}  {'PASS' if passed else 'FAIL'}",
        ]
    )
    _emit(args, payload, text)
    return 0 if passed else 1


# subdivide


def _preset_polygon(args):
    kind = args.preset.replace("-", "_")
    nu = _int_list(args.nu) if args.nu else PRESET_DEFAULT_NU[args.preset]
    probe = CurveSpec(kind, nu, 4, args.tau, args.rho)
    N = args.N or default_point_count(args.n or probe.scheme_n())
    spec = CurveSpec(kind, nu, N, args.tau, args.rho)
    polygon, params = generate(spec)
    n = args.n or params.n
    theta = params.theta if args.theta is None else _theta_of(args.theta)
    return polygon, SchemeParams(n, theta)


def _theta_of(value: float) -> ThetaSpec:
    return ThetaSpec.zero() if value == 0 else ThetaSpec.trigonometric(value)


def cmd_subdivide(args) -> int:
    if args.preset:
        polygon, params = _preset_polygon(args)
    else:
        if args.n is None:
            raise ValueError("--n is required with --input")
        polygon = read_csv(args.input)
        params = SchemeParams(args.n, _theta_of(args.theta or 0.0))

    masks = level_masks(params, args.steps)
    refined = polygon
    for mask in masks:
        refined = refine_once(refined, mask)

    if args.out:
        write_csv(refined, args.out)
    if args.svg:
        write_svg(args.svg, refined.points, polygon.points)
    levels = [{"k": k, "v": format_scalar(m.v)} for k, m in enumerate(masks)]
    payload = {
        "n": params.n,
        "theta": {"kind": params.theta.kind, "value": params.theta.value},
        "steps": args.steps,
        "input_points": len(polygon),
        "output_points": len(refined),
        "levels": levels,
        "out": args.out,
        "svg": args.svg,
    }
    text = (
        f"n={params.n} theta={params.theta.value:.6g} ({params.theta.kind}) "
        f"steps={args.steps}: {len(polygon)} -> {len(refined)} points"
    )
    _emit(args, payload, text)
    return 0


# dd-limit


def cmd_dd_limit(args) -> int:
    dd = dd_symbol(args.n).symbol
    rows = []
    for m in range(1, args.m_max + 1):
        v = 1 - Fraction(1, 4**m)
        dev = closed_form_symbol(args.n, v).symbol.max_abs_diff(dd)
        rows.append({"m": m, "v": format_scalar(v), "deviation": dev})
    devs = [r["deviation"] for r in rows]
    monotone = all(b < a for a, b in zip(devs, devs[1:]))
    text = "\n".join(f"m={r['m']:3d}  deviation {r['deviation']:.3e}" for r in rows)
    text += f"\nmonotone decreasing: {'yes' if monotone else 'no'}"
    _emit(args, {"n": args.n, "rows": rows, "monotone": monotone}, text)
    return 0 if monotone else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expsubdiv", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identities", parents=[common], help="certify the identities")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--t", help="comma-separated t values, e.g. 2,3/2,5,7/3")
    p.add_argument("--arithmetic", choices=("rational", "float"), default="rational")
    p.add_argument("--tol", type=float, default=certify.FLOAT_TOL)
    p.add_argument("--count", type=int, default=200, help="q-Saalschuetz samples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("symbol", parents=[common], help="dump a level symbol as JSON")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--v", help="level parameter, e.g. 5/4")
    group.add_argument("--theta", type=float, help="trigonometric frequency")
    group.add_argument("--hyperbolic", type=float, help="hyperbolic frequency s (theta = i s)")
    p.add_argument("--k", type=int, default=0, help="refinement level")
    p.add_argument("--arithmetic", choices=("rational", "float"), default="rational")
    p.add_argument("--out")
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("compare", parents=[common], help="closed form vs Hurwitz oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--arithmetic", choices=("rational", "float"), default="rational")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("subdivide", parents=[common], help="refine a closed polygon")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=sorted(PRESET_DEFAULT_NU))
    src.add_argument("--input", help="CSV file, one point per line")
    p.add_argument("--n", type=int)
    p.add_argument("--theta", type=float)
    p.add_argument("--steps", type=int, default=6)
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--svg", help="SVG output path")
    p.add_argument("--nu", help="preset frequencies, comma-separated")
    p.add_argument("--N", type=int, help="preset sample count (first point repeated)")
    p.add_argument("--tau", type=float, default=1.0)
    p.add_argument("--rho", type=float, default=0.0)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("dd-limit", parents=[common], help="convergence to Dubuc-Deslauriers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, default=10)
    p.set_defaults(func=cmd_dd_limit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MODULE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
