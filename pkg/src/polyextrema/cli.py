"""Command-line entry point: ``polyextrema <bounds|construct|verify|optimize|render>``.

Exit codes: 0 success (for ``verify``: every check passed), 1 a verification
check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from polyextrema import bounds, constructions, geometry, io, svg
from polyextrema.errors import BadRange, PolyExtremaError
from polyextrema.optimize import search
from polyextrema.verify import Theorem, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_n_token(token: str) -> list[int]:
    """'7' -> [7]; '3..9' -> [3, ..., 9] (inclusive)."""
    try:
        if ".." in token:
            lo, hi = token.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise BadRange(f"empty range {token!r}")
            return list(range(lo, hi + 1))
        return [int(token)]
    except ValueError as exc:
        if isinstance(exc, PolyExtremaError):
            raise
        raise UsageError(f"not an integer or lo..hi range: {token!r}") from None


def parse_range(token: str) -> tuple[int, int]:
    ns = parse_n_token(token)
    return ns[0], ns[-1]


def _u64(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {v}")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_u64, default=0, help="random seed (unsigned 64-bit, default 0)")
    common.add_argument("--json", dest="json_path", metavar="PATH", help="write a machine-readable report")
    common.add_argument("--quiet", action="store_true", help="suppress the text report")

    parser = argparse.ArgumentParser(prog="polyextrema", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="closed-form extremal values per n")
    p.add_argument("--n", nargs="+", required=True, metavar="N", help="values or lo..hi ranges")

    p = sub.add_parser("construct", parents=[common], help="build an extremal construction")
    p.add_argument("--kind", required=True, choices=[k.value for k in constructions.Kind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=1e-6)
    p.add_argument("--k", type=int, default=None, help="cluster split for two_cluster")
    p.add_argument("--radius", type=float, default=None, help="circle radius for star_thrackle")
    p.add_argument("--normalize", action="store_true", help="rescale to unit perimeter")
    p.add_argument("--out", required=True, help="output path, .json or .svg")

    p = sub.add_parser("verify", parents=[common], help="run a check suite")
    p.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    p.add_argument("--n", required=True, metavar="LO..HI")
    parity = p.add_mutually_exclusive_group()
    parity.add_argument("--odd", action="store_true", help="only odd n")
    parity.add_argument("--even", action="store_true", help="only even n")
    p.add_argument("--samples", type=_positive_int, default=None)
    p.add_argument("--restarts", type=_positive_int, default=200)

    p = sub.add_parser("optimize", parents=[common], help="multi-start search for an extremal polygon")
    p.add_argument("--objective", required=True, choices=[k.value for k in search.ObjectiveKind])
    p.add_argument("--direction", required=True, choices=[d.value for d in search.Direction])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--unit-perimeter", action="store_true")
    p.add_argument("--disk", action="store_true")
    p.add_argument("--simple", action="store_true")
    p.add_argument("--restarts", type=_positive_int, default=200)
    p.add_argument("--max-iters", type=_positive_int, default=2000)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--no-seeded-restart", action="store_true",
                   help="start every restart at random, even for simple-polygon problems")
    p.add_argument("--out", default=None, help="write the run as JSON")

    p = sub.add_parser("render", parents=[common], help="draw a polygon JSON file as SVG")
    p.add_argument("input", help="polygon JSON file")
    p.add_argument("output", help="SVG path")
    p.add_argument("--unit-circle", action="store_true")
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--no-caption", action="store_true")
    return parser


def _say(args, *lines):
    if not args.quiet:
        for line in lines:
            print(line)


def _fmt(x) -> str:
    return f"{x:.10g}" if isinstance(x, float) else str(x)


def cmd_bounds(args) -> int:
    ns = [n for tok in args.n for n in parse_n_token(tok)]
    if not ns:
        raise UsageError("no n given")
    rows = [bounds.bound_set(n) for n in ns]
    cols = list(rows[0].to_dict())
    table = [cols] + [[_fmt(v) for v in r.to_dict().values()] for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
    _say(args, *("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in table))
    _say(args, "F_attained / G_attained: False means the value is a supremum approached in a limit.")
    if args.json_path:
        io.write_json({"bounds": [r.to_dict() for r in rows]}, args.json_path)
    return EXIT_OK


def cmd_construct(args) -> int:
    out = Path(args.out)
    if out.suffix.lower() not in (".json", ".svg"):
        raise UsageError(f"--out must end in .json or .svg, got {args.out!r}")
    spec = constructions.ConstructionSpec(kind=args.kind, n=args.n, epsilon=args.epsilon,
                                          cluster_split=args.k, radius=args.radius)
    p = spec.build()
    if args.normalize:
        p = geometry.normalize_to_unit_perimeter(p)
    if out.suffix.lower() == ".svg":
        svg.write_svg(p, out, svg.RenderOptions(unit_circle=spec.in_unit_disk and not args.normalize))
    else:
        io.write_polygon(p, out)
    m = geometry.metric_summary(p)
    report = {
        "kind": spec.kind.value, "n": spec.n, "epsilon": spec.epsilon,
        "perimeter": m.perimeter, "sum_distances": m.sum_distances,
        "sum_squared_distances": m.sum_squared_distances, "longest_edge": m.longest_edge,
        "simple": geometry.is_simple(p), "convex_position": geometry.is_convex_position(p),
        "inside_unit_disk": geometry.inside_unit_disk(p), "out": str(out),
    }
    _say(args, *(f"{k}: {_fmt(v)}" for k, v in report.items()))
    if args.json_path:
        io.write_json(report, args.json_path)
    return EXIT_OK


def cmd_verify(args) -> int:
    parity = "odd" if args.odd else "even" if args.even else "all"
    rep = run_verify(args.theorem, parse_range(args.n), args.seed, parity=parity,
                     samples=args.samples, restarts=args.restarts)
    _say(args, *rep.summary_lines())
    if args.json_path:
        io.write_json(rep.to_dict(), args.json_path)
    return EXIT_OK if rep.overall_pass else EXIT_FAIL


def cmd_optimize(args) -> int:
    objective = search.Objective(args.objective, args.direction)
    constraints = search.ConstraintSet(unit_perimeter=args.unit_perimeter, inside_unit_disk=args.disk,
                                       require_simple=args.simple)
    run = search.optimize(objective, constraints, args.n, seed=args.seed, restarts=args.restarts,
                          max_iters=args.max_iters, seed_construction=not args.no_seeded_restart,
                          workers=args.workers)
    obj = run.to_json_obj()
    _say(args,
         f"{objective.direction.value} {objective.kind.value}, n={run.n}, seed={run.seed}, "
         f"restarts={run.restarts}",
         f"best value: {run.best_value:.17g} (restart {run.best_restart})",
         *(f"  A_{i + 1} = ({x:.17g}, {y:.17g})" for i, (x, y) in enumerate(run.best_polygon.vertices)))
    if objective.direction is search.Direction.MINIMIZE:
        _say(args, "numerical probe: the reported minimum is an upper estimate, not a certified infimum")
    if args.out:
        io.write_json(obj, args.out)
    if args.json_path:
        io.write_json(obj, args.json_path)
    return EXIT_OK


def cmd_render(args) -> int:
    p = io.read_polygon(args.input)
    opts = svg.RenderOptions(unit_circle=args.unit_circle, labels=not args.no_labels,
                             caption=not args.no_caption)
    svg.write_svg(p, args.output, opts)
    _say(args, f"wrote {args.output}", svg.caption_text(p))
    if args.json_path:
        io.write_json({"input": args.input, "output": args.output,
                       **geometry.metric_summary(p).__dict__}, args.json_path)
    return EXIT_OK


COMMANDS = {"bounds": cmd_bounds, "construct": cmd_construct, "verify": cmd_verify,
            "optimize": cmd_optimize, "render": cmd_render}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except (UsageError, PolyExtremaError, OSError) as exc:
        print(f"polyextrema {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
