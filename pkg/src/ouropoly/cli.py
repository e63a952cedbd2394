"""Command-line frontend.

Subcommands cover every core operation: ``gen``, ``matrix``, ``trace``,
``trace-degree``, ``det``, ``charpoly``, ``verify``, ``roots``.  Every
subcommand accepts ``--format plain|json|latex`` (default plain) and
``--seed`` (default 0; only ``verify`` consumes it).

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
failure.  Output for fixed arguments and seed is byte-identical across
runs.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .constraints import verify_vanishing_suite
from .generators import gen_p, quadratic_roots
from .matrices import (
    PolyMatrix,
    build_matrix,
    char_poly,
    degree_of_trace,
    determinant_cofactor,
    determinant_leibniz,
    trace_degree_formula,
    trace_product,
    trace_sum,
)
from .polynomial import Polynomial
from .serialization import render_json, render_latex

__all__ = ["main"]

# trace-degree builds the full matrix by default; cap n so the default
# path stays fast and predictable.  --formula-only lifts the cap.
_TRACE_DEGREE_BUILD_CAP = 12


def _render_poly(p: Polynomial, fmt: str) -> str:
    if fmt == "json":
        return render_json(p)
    if fmt == "latex":
        return render_latex(p)
    return str(p)


def _render_matrix(M: PolyMatrix, fmt: str) -> str:
    if fmt == "json":
        return render_json(M)
    lines = []
    for k in range(1, M.rows + 1):
        cells = [
            _render_poly(M.entry(k, j), fmt) for j in range(1, M.cols + 1)
        ]
        if fmt == "latex":
            lines.append(" & ".join(cells))
        else:
            lines.append("[" + ", ".join(cells) + "]")
    if fmt == "latex":
        body = " \\\\\n".join(lines)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"
    return "\n".join(lines)


def _cmd_gen(args) -> int:
    print(_render_poly(gen_p(args.n, args.k, args.j), args.format))
    return 0


def _cmd_matrix(args) -> int:
    print(_render_matrix(build_matrix(args.n, args.m), args.format))
    return 0


def _cmd_trace(args) -> int:
    M = build_matrix(args.n, args.n)
    t = trace_sum(M) if args.standard else trace_product(M)
    print(_render_poly(t, args.format))
    return 0


def _cmd_trace_degree(args) -> int:
    if args.formula_only:
        deg = trace_degree_formula(args.n)
    else:
        if args.n > _TRACE_DEGREE_BUILD_CAP:
            raise ValueError(
                f"n={args.n} exceeds the build cap of "
                f"{_TRACE_DEGREE_BUILD_CAP} for full matrix construction; "
                f"pass --formula-only to use the closed formula"
            )
        deg = degree_of_trace(build_matrix(args.n, args.n))
    if args.format == "json":
        print(f'{{"n":{args.n},"degree":{deg}}}')
    else:
        print(deg)
    return 0


def _cmd_det(args) -> int:
    M = build_matrix(args.n, args.n)
    if args.method == "cofactor":
        d = determinant_cofactor(M)
    else:
        d = determinant_leibniz(M)
    print(_render_poly(d, args.format))
    return 0


def _cmd_charpoly(args) -> int:
    print(_render_poly(char_poly(build_matrix(args.n, args.n)), args.format))
    return 0


def _cmd_verify(args) -> int:
    report = verify_vanishing_suite(
        args.n_max, args.j_max, samples=args.samples, seed=args.seed
    )
    if args.format == "json":
        print(render_json(report))
    else:
        print(f"passed {report.cases_passed}/{report.cases_total} cases")
        for n, k, j, detail in report.failures:
            print(f"FAIL n={n} k={k} j={j}: {detail}")
    return 0 if report.all_passed else 3


def _cmd_roots(args) -> int:
    for root in quadratic_roots(args.n, args.k):
        print(_render_poly(root, args.format))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ouropoly",
        description=(
            "Exact symbolic toolkit for a family of polynomials that "
            "vanish on the hyperplane where the variables sum to 1, and "
            "for matrices built from them."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("plain", "json", "latex"),
        default="plain",
        help="output format (default: plain)",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=0,
        help="random seed for sampling subcommands (default: 0)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "gen", parents=[common], help="print the generator polynomial"
    )
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--k", type=int, required=True, help="pivot variable index")
    p.add_argument("--j", type=int, required=True, help="power parameter")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser(
        "matrix", parents=[common], help="print the n x m generator matrix"
    )
    p.add_argument("--n", type=int, required=True, help="number of rows")
    p.add_argument("--m", type=int, required=True, help="number of columns")
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser(
        "trace",
        parents=[common],
        help="print the diagonal-product trace of the n x n matrix",
    )
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument(
        "--standard",
        action="store_true",
        help="use the conventional diagonal-sum trace instead",
    )
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser(
        "trace-degree",
        parents=[common],
        help="print the total degree of the diagonal-product trace",
    )
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument(
        "--formula-only",
        action="store_true",
        help="evaluate the closed formula (n^2+3n)/2 without building "
        "the matrix; required for n > %d" % _TRACE_DEGREE_BUILD_CAP,
    )
    p.set_defaults(handler=_cmd_trace_degree)

    p = sub.add_parser(
        "det", parents=[common], help="print det of the n x n matrix"
    )
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument(
        "--method",
        choices=("leibniz", "cofactor"),
        default="leibniz",
        help="expansion strategy (default: leibniz)",
    )
    p.set_defaults(handler=_cmd_det)

    p = sub.add_parser(
        "charpoly",
        parents=[common],
        help="print det(M - lambda*I) for the n x n matrix",
    )
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.set_defaults(handler=_cmd_charpoly)

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="check that every generator vanishes on the sum-to-1 "
        "hyperplane, symbolically and at sampled points",
    )
    p.add_argument("--n-max", type=int, default=4, help="largest n (default 4)")
    p.add_argument(
        "--j-max", type=int, default=4, help="largest power (default 4)"
    )
    p.add_argument(
        "--samples",
        type=int,
        default=10,
        help="sampled points per case (default 10)",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "roots",
        parents=[common],
        help="print the two symbolic roots of the quadratic generator, "
        "one per line",
    )
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--k", type=int, required=True, help="pivot variable index")
    p.set_defaults(handler=_cmd_roots)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
