"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 size cap or timeout, 4 rejected family.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import __version__
from .bounds import AggregateOptions, aggregate, packing_point_exact, uniform_clique_union_test
from .cliqueunion import CliqueUnion, capacity, free_lunch_point, packing_point
from .curves import (
    DEFAULT_GRID,
    CapacityCurve,
    double_union,
    exact_curve,
    from_json,
    product_with_clique,
    sup_convolution,
    to_csv,
    to_json,
    union_lower_bound,
    union_with_clique,
)
from .errors import CapExceeded, InputError, SearchTimeout, VerificationError
from .formats import format_family, format_vertex, load_graph, parse_builtin, parse_family_text, parse_sizes
from .graph import DEFAULT_MAX_VERTICES, clique_union_sizes, strong_power
from .independence import DEFAULT_TIMEOUT_S, max_family
from .oracle import MAX_SUM_POWER, TIE_TOL, alpha_k_power, multinomial_sums, verify_broadcast_code

EXIT_INPUT, EXIT_CAP, EXIT_REJECT = 2, 3, 4


def _num(x: float) -> float:
    """Round to 12 significant digits for reports."""
    if not math.isfinite(x):
        return x
    return float(f"{x:.12g}")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(obj: dict, out: str | None):
    _emit(json.dumps(obj, indent=1) + "\n", out)


def _clique_union(source: str) -> CliqueUnion:
    if source.startswith("U:"):
        return CliqueUnion.of(parse_sizes(source[2:]))
    sizes = clique_union_sizes(load_graph(source))
    if sizes is None:
        raise InputError(f"{source!r} is not a disjoint union of cliques")
    return CliqueUnion.of(sizes)


# -- commands ------------------------------------------------------------------------


def cmd_alphak(args) -> int:
    g = load_graph(args.graph)
    n = args.n or 1
    if g.n**n > args.max_power_vertices:
        raise CapExceeded(f"G^{n} has {g.n**n} vertices (cap {args.max_power_vertices})")
    h = strong_power(g, n) if n > 1 else g
    fam = max_family(h, args.k, args.timeout_s, n)
    lines = format_family(fam, g.n).splitlines()
    _report({"n": n, "k": args.k, "alpha_k": len(fam), "witness": lines}, args.out)
    return 0


def _profile_options(args) -> AggregateOptions:
    return AggregateOptions(grid=args.grid, timeout_s=args.timeout_s)


def cmd_curve(args) -> int:
    g = load_graph(args.graph)
    prof = aggregate(g, _profile_options(args))
    if args.format == "csv":
        _emit(to_csv(prof.lower, prof.upper), args.out)
    else:
        _emit(to_json(prof) + "\n", args.out)
    return 0


def cmd_points(args) -> int:
    g = load_graph(args.graph)
    sizes = clique_union_sizes(g)
    rep = {"m": g.n, "packing_point": _num(packing_point_exact(g)), "uniform_clique_union": uniform_clique_union_test(g)}
    if sizes is not None:
        cu = CliqueUnion.of(sizes)
        rep["free_lunch_point"] = _num(free_lunch_point(cu))
        rep["C0"] = _num(math.log2(cu.s))
        rep["witness"] = "exact: disjoint union of cliques " + str(cu)
    else:
        prof = aggregate(g, _profile_options(args))
        rep["free_lunch_lower"] = _num(prof.free_lunch_lower)
        rep["C0_lower"] = _num(float(prof.lower.values[0]))
        rep["C0_upper"] = _num(float(prof.upper.values[0]))
        rep["witness"] = [c.as_dict() for c in prof.certificates if c.theorem == "Cor3-freelunch"]
    _report(rep, args.out)
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    n = args.n or 1
    try:
        with open(args.family) as fh:
            fam = parse_family_text(fh.read(), g.n, n)
    except OSError as exc:
        raise InputError(f"cannot read family file: {exc}") from None
    try:
        code = verify_broadcast_code(g, n, fam, args.max_power_vertices)
    except VerificationError as exc:
        rep = {"accepted": False, "reason": str(exc)}
        if exc.pair is not None:
            i, j, u, v = exc.pair
            rep["reason"] = f"subsets {i + 1} and {j + 1} clash"
            rep["pair"] = [format_vertex(u, g.n, n), format_vertex(v, g.n, n)]
            rep["subsets"] = [i + 1, j + 1]
        _report(rep, args.out)
        return EXIT_REJECT
    _report({"accepted": True, "n": n, "subsets": len(fam), "rho": _num(code.rho), "R": _num(code.R)}, args.out)
    return 0


def cmd_oracle(args) -> int:
    if args.k is not None:
        g = load_graph(args.graph)
        n = args.n or 1
        a = alpha_k_power(g, n, args.k, args.max_power_vertices, args.timeout_s)
        _report({"n": n, "k": args.k, "alpha_k": a}, args.out)
        return 0
    if args.rho is None or args.n is None:
        raise InputError("oracle needs --n and --rho (or --k for alpha_k)")
    if args.n > MAX_SUM_POWER:
        raise CapExceeded(f"n capped at {MAX_SUM_POWER}")
    cu = _clique_union(args.graph)
    lo, hi = free_lunch_point(cu), packing_point(cu)
    if not lo - TIE_TOL <= args.rho <= hi + TIE_TOL:
        raise InputError(f"--rho {args.rho} outside [{lo:.12g}, {hi:.12g}], where the sums track the closed form")
    s = multinomial_sums(cu, args.n, args.rho)
    exact = capacity(cu, args.rho)
    _report(
        {
            "n": s.n,
            "A_num": str(s.A_numerator),
            "B": str(s.B),
            "rate_A": _num(s.rate_A),
            "rate_B": _num(s.rate_B),
            "closed_form": _num(exact),
            "gap": _num(abs(s.rate_B - exact)),
        },
        args.out,
    )
    return 0


def _load_curve(source: str, grid: int) -> tuple[CapacityCurve, int]:
    """A curve plus its vertex count, from a curve JSON file or a graph."""
    if source.endswith(".json") and os.path.exists(source):
        with open(source) as fh:
            lower, upper = from_json(fh.read())
        if lower is None:
            raise InputError(f"{source}: no lower curve to transform")
        m = round(2.0**lower.log_m)
        return lower, m
    g = parse_builtin(source) or load_graph(source)
    sizes = clique_union_sizes(g)
    if sizes is not None:
        return exact_curve(CliqueUnion.of(sizes), grid), g.n
    return aggregate(g, AggregateOptions(grid=grid)).lower, g.n


def cmd_algebra(args) -> int:
    c1, m1 = _load_curve(args.inputs[0], args.grid)
    need_two = args.op in ("supconv", "union")
    if need_two and len(args.inputs) != 2:
        raise InputError(f"{args.op} takes two inputs")
    if not need_two and len(args.inputs) != 1:
        raise InputError(f"{args.op} takes one input")
    if args.op in ("xclique", "unionclique") and not args.m:
        raise InputError(f"{args.op} needs --m")
    if args.op == "supconv":
        c2, _ = _load_curve(args.inputs[1], args.grid)
        out = sup_convolution(c1, c2, args.grid)
    elif args.op == "xclique":
        out = product_with_clique(c1, args.m, args.grid)
    elif args.op == "doubleunion":
        out = double_union(c1, args.grid)
    elif args.op == "union":
        c2, m2 = _load_curve(args.inputs[1], args.grid)
        out = union_lower_bound(c1, m1, c2, m2, n=args.grid)
    else:
        out = union_with_clique(c1, m1, args.m, n=args.grid)
    if args.format == "csv":
        lo = out if out.kind != "upper" else None
        up = out if out.kind != "lower" else None
        _emit(to_csv(lo, up), args.out)
    else:
        _emit(to_json(out) + "\n", args.out)
    return 0


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rho", type=float)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--gamma", type=float)
    common.add_argument("--grid", type=int, default=DEFAULT_GRID)
    common.add_argument("--tol", type=float, default=1e-12)
    common.add_argument("--max-power-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    common.add_argument("--timeout-s", type=float, default=DEFAULT_TIMEOUT_S)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out")

    p = argparse.ArgumentParser(prog="rhocap", description="rho-capacity of graphs: exact values and certified bounds")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("alphak", parents=[common], help="exact k-independence number of G^n")
    s.add_argument("graph")
    s.set_defaults(func=cmd_alphak)

    s = sub.add_parser("curve", parents=[common], help="exact curve or certified bounds")
    s.add_argument("graph")
    s.set_defaults(func=cmd_curve)

    s = sub.add_parser("points", parents=[common], help="packing point and free-lunch bound")
    s.add_argument("graph")
    s.set_defaults(func=cmd_points)

    s = sub.add_parser("verify", parents=[common], help="check a family of G^n as a broadcast code")
    s.add_argument("graph")
    s.add_argument("family")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", parents=[common], help="exact multinomial sums or alpha_k of a power")
    s.add_argument("graph")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("algebra", parents=[common], help="curve transforms for products and unions")
    s.add_argument("op", choices=("supconv", "xclique", "doubleunion", "union", "unionclique"))
    s.add_argument("inputs", nargs="+")
    s.add_argument("--m", type=int, help="clique size for xclique / unionclique")
    s.set_defaults(func=cmd_algebra)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.k is not None and args.k < 1:
        print("error: --k must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    if args.n is not None and args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except SearchTimeout as exc:
        print(f"error: {exc} (best lower bound found: {exc.best_lower})", file=sys.stderr)
        return EXIT_CAP
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
