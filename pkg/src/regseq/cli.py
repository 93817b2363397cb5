"""Command-line front end: ``regseq solve|extract|construct|verify``.

Exit codes: 0 on success, 1 on a domain error (message on stderr), 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import io
from .constructions import (
    build_cantor,
    build_colouring,
    build_density_example,
    build_difference_example,
)
from .core import RegSeqError, regularity_witness, InvalidWitness
from .covering import refine_regularity
from .extractors import (
    colouring_extract,
    dense_diff_extract,
    regular_to_convex,
    sparse_diff_extract,
)
from .solvers import brute_convex, brute_r_l, exact_convex, exact_r_l
from .verify import SUITES


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _emit(result, as_json: bool, extra: dict | None = None):
    seq = list(result.subsequence if hasattr(result, "subsequence") else result.sequence)
    if as_json:
        payload = {"length": len(seq), "sequence": seq}
        payload.update(extra or {})
        print(json.dumps(payload))
    else:
        print(len(seq))
        print(" ".join(map(str, seq)))


def cmd_solve(args) -> int:
    A = io.read_set(args.input)
    if args.quantity == "convex":
        res = brute_convex(A) if args.oracle else exact_convex(A)
    else:
        L = Fraction(2) if args.quantity == "r2" else args.L
        if args.oracle:
            res = brute_r_l(A, L)
        else:
            res = exact_r_l(A, L, threshold=args.threshold)
    _emit(res, args.json)
    return 0


def _witness_2(A):
    W = regularity_witness(A, 2)
    if W is None:
        raise InvalidWitness("input set is not 2-regular")
    return W


def cmd_extract(args) -> int:
    extra = {}
    if args.method == "colouring":
        colour, res = colouring_extract(io.read_colouring(args.input))
        extra["colour"] = colour
    else:
        A = io.read_set(args.input)
        N = args.N if args.N is not None else (A[-1] if A else 0)
        if args.method == "dense-diff":
            res = dense_diff_extract(A, N)
        elif args.method == "sparse-diff":
            res = sparse_diff_extract(A, N, args.delta)
        elif args.method == "reg-convex":
            res = regular_to_convex(A, _witness_2(A))
        else:
            res = refine_regularity(A, _witness_2(A), args.l)
    if args.trace:
        io.write_trace(args.trace, res.trace)
    extra["claimed_lower_bound"] = res.claimed_lower_bound
    _emit(res, args.json, extra)
    return 0


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "colouring":
        c = build_colouring(args.r, args.M)
        text = io.format_colouring(c)
    else:
        if kind == "cantor":
            A = build_cantor(args.k, args.K).final
        elif kind == "density":
            A = build_density_example(args.k)
        else:
            A = build_difference_example(args.n)
        text = io.format_set(A)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(text.encode("utf-8"))
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    suite = SUITES[args.theorem]
    kwargs = {"seed": args.seed}
    if args.trials is not None:
        if args.theorem not in {"colouring-construction", "cantor", "difference-construction"}:
            kwargs["trials"] = args.trials
    if args.n is not None:
        if args.theorem != "difference-construction":
            raise RegSeqError("--n applies to difference-construction only")
        kwargs["n_max"] = args.n
    report = suite(**kwargs)
    print(report.text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact R_L(A) or C(A) of a set file")
    p.add_argument("quantity", choices=["r2", "rL", "convex"])
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--L", type=_fraction, default=Fraction(2), help="regularity ratio, e.g. 3/2")
    p.add_argument("--threshold", type=int, help="stop once a subset longer than this is found")
    p.add_argument("--oracle", action="store_true", help="use exhaustive search (|A| <= 20)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("extract", help="run one of the constructive extractors")
    p.add_argument("method", choices=["colouring", "dense-diff", "sparse-diff", "reg-convex", "refine"])
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--N", type=int, help="ground set [N] (default: max of the set)")
    p.add_argument("--delta", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--l", type=int, default=2, help="refinement parameter, l >= 2")
    p.add_argument("--trace", metavar="FILE", help="write the JSON trace here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("construct", help="build one of the extremal examples")
    p.add_argument("kind", choices=["colouring", "cantor", "density", "difference"])
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--M", type=int, default=4)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--K", type=int, default=4)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a seeded theorem-verification suite")
    p.add_argument("theorem", choices=sorted(SUITES))
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=int(os.environ.get("RS_SEED", 0)))
    p.add_argument("--n", type=int, help="largest n for difference-construction")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RegSeqError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
