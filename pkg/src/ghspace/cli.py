"""Command-line front end.

Exit codes: 0 success, 1 a domain check failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .embedding import embed, verify_embedding
from .errors import GHSpaceError, MetricError, NotGeneric, ParseError, SinglePoint, SizeCapExceeded
from .io import dump_space, load_space, save_space
from .metric import delta, diameter, is_generic
from .nonuniversality import run_demo
from .nu import local_isometry_check
from .rational import format_rational, render_decimal
from .sampling import sample_generic
from .solver import DEFAULT_SOLVER_CAP, gh_distance_exact, gh_upper_bound_diam

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _show(q, precision: int) -> str:
    return f"{format_rational(q)} (~{render_decimal(q, precision)})"


def _load(path, args):
    return load_space(path, args.input_format)


def cmd_validate(args) -> int:
    try:
        X = _load(args.path, args)
    except MetricError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    print(f"n={X.n}")
    print(f"diam={format_rational(diameter(X))}")
    try:
        dv = delta(X)
        print(f"delta={format_rational(dv.value)}")
        print(f"generic={'true' if dv.value > 0 else 'false'}")
    except SinglePoint:
        print("delta=undefined")
        print("generic=false")
    return EXIT_OK


def cmd_dist(args) -> int:
    X, Y = _load(args.x, args), _load(args.y, args)
    if args.bound:
        value = gh_upper_bound_diam(X, Y)
        print(_show(value, args.precision))
        return EXIT_OK
    try:
        result = gh_distance_exact(X, Y, cap=args.solver_cap, workers=args.workers)
    except SizeCapExceeded as exc:
        print(f"{exc}; use --bound or raise --solver-cap", file=sys.stderr)
        return EXIT_FAIL
    if args.json:
        print(json.dumps(result.to_json()))
    else:
        print(_show(result.distance, args.precision))
    return EXIT_OK


def cmd_embed(args) -> int:
    X = _load(args.path, args)
    result = embed(X)
    out = Path(args.out) if args.out else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / "embedding.json").write_text(json.dumps(result.to_json(), indent=2) + "\n")
        suffix = "json" if args.format == "json" else "txt"
        for i, Y in enumerate(result.images):
            save_space(Y, out / f"image_{i}.{suffix}", args.format)
    print(f"k={result.k} images={len(result.images)}")
    if not args.verify:
        return EXIT_OK
    try:
        report = verify_embedding(X, result, cap=args.solver_cap, workers=args.workers)
    except SizeCapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    if out is not None:
        (out / "verify.json").write_text(json.dumps(report.to_json(), indent=2) + "\n")
    for p in report.pairs:
        mark = "ok" if p.ok else "MISMATCH"
        print(f"d_GH(Y{p.i},Y{p.j}) = {format_rational(p.computed)} expected {format_rational(p.expected)} {mark}")
    print("verify=" + ("pass" if report.passed else "fail"))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_sample_generic(args) -> int:
    X = sample_generic(args.n, args.seed)
    text = dump_space(X, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_demo_nonuniversality(args) -> int:
    report = run_demo(args.samples, args.seed, cap=args.solver_cap, workers=args.workers)
    print(f"generator=PCG64 seed={args.seed}")
    print(f"A -> Delta_1, B -> Delta_2: d_GH(Delta_1, Delta_2) = {format_rational(report.d_ab)} = |AB|")
    print("any image X of C needs d_GH(Delta_1, X) = diam(X)/2 = 1/2, so diam(X) = 1,")
    print("and then d_GH(Delta_2, X) <= max(diam Delta_2, diam X)/2 = 1/2 < 2/3.")
    worst = max(c.to_segment for c in report.candidates)
    bad = [c for c in report.candidates if not c.ok]
    print(f"checked {len(report.candidates)} candidates with diam 1: max d_GH(Delta_2, X) = {format_rational(worst)}")
    if args.out:
        Path(args.out).write_text(json.dumps(report.to_json(), indent=2) + "\n")
    if bad:
        print(f"{len(bad)} candidates violate the bound", file=sys.stderr)
        return EXIT_FAIL
    print("d(A,B)=1/2; all sampled candidates for C satisfy d(B,C) <= 1/2 != 2/3")
    return EXIT_OK


def cmd_check_isometry(args) -> int:
    X = _load(args.path, args)
    try:
        report = local_isometry_check(X, args.samples, args.seed, cap=args.solver_cap, workers=args.workers)
    except (NotGeneric, SinglePoint) as exc:
        print(f"NotGeneric: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except SizeCapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        Path(args.out).write_text(json.dumps(report.to_json(), indent=2) + "\n")
    failed = report.counterexamples
    print(f"generator={report.generator} seed={report.seed} radius={format_rational(report.radius)}")
    print(f"samples={len(report.samples)} passed={len(report.samples) - len(failed)}")
    for s in failed:
        print("counterexample: " + json.dumps(s.to_json()), file=sys.stderr)
    return EXIT_OK if not failed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--solver-cap", type=int, default=DEFAULT_SOLVER_CAP)
    common.add_argument("--workers", type=int, default=1, help="solver threads")
    common.add_argument("--samples", type=int, default=20)
    common.add_argument("--out")
    common.add_argument("--format", choices=("json", "matrix"), default="json", help="output format for spaces")
    common.add_argument("--input-format", choices=("json", "matrix"), default=None,
                        help="input format (default: detect)")
    common.add_argument("--precision", type=int, default=6, help="decimal digits in human-readable output")

    parser = argparse.ArgumentParser(prog="ghspace", description="Exact Gromov-Hausdorff toolkit for finite metric spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the metric axioms and report diam, delta")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dist", parents=[common], help="Gromov-Hausdorff distance of two spaces")
    p.add_argument("x")
    p.add_argument("y")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--bound", action="store_true", help="half the larger diameter")
    p.add_argument("--json", action="store_true", help="print the solver result as JSON")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("embed", parents=[common], help="embed a space into k-point spaces")
    p.add_argument("path")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("sample-generic", parents=[common], help="emit a random generic space")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_sample_generic)

    p = sub.add_parser("demo-nonuniversality", parents=[common], help="the two-point embedding that does not extend")
    p.set_defaults(func=cmd_demo_nonuniversality, samples=100)

    p = sub.add_parser("check-isometry", parents=[common], help="sample the local isometry around a generic space")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_isometry)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.solver_cap < 2 or args.samples < 1:
        parser.error("--solver-cap must be >= 2 and --samples >= 1")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MetricError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    except GHSpaceError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
