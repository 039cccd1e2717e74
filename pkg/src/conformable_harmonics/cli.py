"""Command-line front end: ``eval``, ``table``, ``verify`` and ``plot-data``."""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from .alpha_calculus import as_alpha
from .harmonics import (
    PAPER_TABLE,
    AngularPoint,
    TableMismatchError,
    density,
    harmonic_evaluate,
    make_harmonic,
    render_row,
    table_closed_forms,
)
from .plotdata import DEFAULT_GRID, make_plot_grid, output_name, write_csv, write_json
from .verification import DEFAULT_ALPHAS, run_suite


def parse_alphas(spec) -> list[Fraction]:
    """Parse ``"1/4,1/2"``, ``"0.1..0.9:0.1"`` or ``"0.1..0.9 step 0.1"``."""
    text = " ".join(spec) if isinstance(spec, (list, tuple)) else str(spec)
    text = text.replace(" step ", ":").replace(" ", "")
    out: list[Fraction] = []
    for item in filter(None, text.split(",")):
        if ".." in item:
            rng, _, step = item.partition(":")
            lo, hi = (as_alpha(x) for x in rng.split(".."))
            step = Fraction(step).limit_denominator(10**6) if step else Fraction(1, 10)
            if step <= 0:
                raise ValueError("alpha step must be positive")
            a = lo
            while a <= hi:
                out.append(a)
                a += step
        else:
            out.append(as_alpha(item))
    if not out:
        raise ValueError("no alpha values given")
    return out


def parse_grid(text: str) -> tuple[int, int]:
    try:
        nt, npf = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise ValueError(f"grid must look like 121x241, got {text!r}") from None
    if nt < 2 or npf < 2:
        raise ValueError("grid sizes must be at least 2")
    return nt, npf


def cmd_eval(args) -> int:
    alpha = as_alpha(args.alpha)
    Y = make_harmonic(args.l, args.m, alpha)
    pt = AngularPoint(args.theta, args.phi)
    value = harmonic_evaluate(Y, pt)
    print(f"Y_{args.l}^{args.m}(alpha={alpha}) = {value.real:.12g} {value.imag:+.12g}i")
    print(f"|Y|^2 = {density(Y, pt):.12g}")
    return 0


def cmd_table(args) -> int:
    reference = PAPER_TABLE
    if args.inject_fault:
        # test hook: corrupt one reference row so the comparison must fail
        first = PAPER_TABLE[0]
        reference = (first._replace(radicand=first.radicand * 2),) + PAPER_TABLE[1:]
    try:
        rows = table_closed_forms(reference)
    except TableMismatchError as exc:
        print(f"table mismatch: {exc}", file=sys.stderr)
        return 1
    print(f"{'l':>2} {'m':>3}  Y_l^m")
    for row in rows:
        print(f"{row.l:>2} {row.m:>3}  {render_row(row, args.alpha)}")
    print(f"all {len(rows)} rows match the closed-form table")
    return 0


def cmd_verify(args) -> int:
    start = time.perf_counter()
    results = run_suite(args.lmax, parse_alphas(args.alphas), args.tolerance)
    for r in results:
        print(r.line())
    failed = [r.name for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed in {time.perf_counter() - start:.1f} s")
    return 1 if failed else 0


def cmd_plot_data(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    grid = parse_grid(args.grid)
    for alpha in parse_alphas(args.alphas):
        g = make_plot_grid(args.l, args.m, alpha, args.mode, grid)
        path = out / output_name(g, args.format)
        (write_csv if args.format == "csv" else write_json)(g, path)
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conformable-harmonics",
        description="Conformable associated Legendre functions and spherical harmonics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate Y and |Y|^2 at one point")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="regenerate and check the l <= 2 closed forms")
    p.add_argument("--alpha", default=None, help="substitute a value of alpha in the display")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--lmax", type=int, default=4)
    p.add_argument("--alphas", default=",".join(str(a) for a in DEFAULT_ALPHAS))
    p.add_argument("--tolerance", type=float, default=None,
                   help="override every check's tolerance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot-data", help="write |Y|^2 grids for plotting")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alphas", nargs="+", default=["1"],
                   help='e.g. "1/2,1", "0.1..0.9:0.1" or 0.1..0.9 step 0.1')
    p.add_argument("--mode", choices=("surface", "polar"), default="surface")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--grid", default="{}x{}".format(*DEFAULT_GRID))
    p.set_defaults(func=cmd_plot_data)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
