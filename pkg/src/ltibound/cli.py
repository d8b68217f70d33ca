"""Command-line front end.

Exit codes: 0 bounded (or success), 1 unbounded, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .exact_core import IntPoly
from .fraction_free import determinant
from .kernel import has_boundedness_property
from .matrixfile import read_matrix
from .minpoly import minimal_polynomial
from .moebius import moebius_transform
from .pipeline import decide_continuous, decide_discrete, kernel_dict

EXIT_BOUNDED, EXIT_UNBOUNDED, EXIT_ERROR = 0, 1, 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ltibound",
        description="Exact boundedness decisions for rational LTI systems.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide boundedness of exp(At) or A^t")
    p.add_argument("--mode", choices=("continuous", "discrete"), required=True)
    p.add_argument("--trace", action="store_true", help="print the evidence trail as JSON")
    p.add_argument("--timings", action="store_true", help="include wall-clock stage timings in the trace")
    p.add_argument("file")

    p = sub.add_parser("minpoly", help="print e0 ... ed, the scaled minimal polynomial of the numerator B")
    p.add_argument("file")

    p = sub.add_parser("check-poly", help="run the kernel on c0 c1 ... cd (descending)")
    p.add_argument("coeffs", nargs="+", type=int)
    p.add_argument("--discrete", action="store_true", help="unit-disk property via the Moebius map")
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("det", help="print the exact determinant")
    p.add_argument("file")
    return parser


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _cmd_decide(args: argparse.Namespace) -> int:
    A = read_matrix(args.file)
    if not A.is_square:
        raise ValueError(f"{args.file}: decide needs a square matrix, got {A.shape[0]}x{A.shape[1]}")
    report = (decide_continuous if args.mode == "continuous" else decide_discrete)(A)
    print(report.verdict)
    if args.trace:
        _emit(report.as_dict(include_timings=args.timings))
    return EXIT_BOUNDED if report.bounded else EXIT_UNBOUNDED


def _cmd_minpoly(args: argparse.Namespace) -> int:
    A = read_matrix(args.file)
    if not A.is_square:
        raise ValueError(f"{args.file}: minpoly needs a square matrix, got {A.shape[0]}x{A.shape[1]}")
    mp = minimal_polynomial(A.numerator)
    print(" ".join(str(c) for c in mp.coeffs))
    return 0


def _cmd_check_poly(args: argparse.Namespace) -> int:
    p = IntPoly(args.coeffs)
    if p.is_zero:
        raise ValueError("check-poly needs a nonzero polynomial")
    doc: dict = {"polynomial": list(p.coeffs)}
    target = p
    # a nonzero constant has no roots and passes either test as is
    if args.discrete and p.degree >= 1:
        mob = moebius_transform(p)
        doc["moebius"] = {"P": list(mob.P.coeffs), "delta": mob.delta, "output": list(mob.output.coeffs)}
        target = mob.output
    verdict = has_boundedness_property(target)
    print("YES" if verdict.bounded else "NO")
    if args.trace:
        doc["kernel"] = kernel_dict(verdict)
        _emit(doc)
    return EXIT_BOUNDED if verdict.bounded else EXIT_UNBOUNDED


def _cmd_det(args: argparse.Namespace) -> int:
    A = read_matrix(args.file)
    if not A.is_square:
        raise ValueError(f"{args.file}: det needs a square matrix, got {A.shape[0]}x{A.shape[1]}")
    print(Fraction(determinant(A.numerator), A.denominator ** A.shape[0]))
    return 0


_COMMANDS = {
    "decide": _cmd_decide,
    "minpoly": _cmd_minpoly,
    "check-poly": _cmd_check_poly,
    "det": _cmd_det,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return _COMMANDS[args.command](args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


run = main


if __name__ == "__main__":
    sys.exit(main())
