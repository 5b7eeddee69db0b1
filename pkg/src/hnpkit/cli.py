"""Command-line front end.

    hnpkit check ALGEBRA.json --identity hnp
    hnpkit construct tensor --in A.json --in2 B.json --out AB.json
    hnpkit verify --seed 0 --depth 2

Exit status: 0 when the identity holds / the construction succeeds / every
theorem instance passes, 1 when an identity or a construction hypothesis fails,
2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as C
from .checks import (
    check_commutative,
    check_hnp,
    check_hom_associative,
    check_hom_lie,
    check_hom_novikov,
    check_hom_poisson,
    check_multiplicative,
)
from .io import (
    FormatError,
    algebra_to_dict,
    dumps_algebra,
    load_algebra,
    load_map,
    parse_vector,
    save_algebra,
)
from .linalg import DimensionMismatch
from .suite import run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

CHECKS = {
    "commutative": lambda A: check_commutative(A.dot),
    "hom-associative": lambda A: check_hom_associative(A.dot_algebra()),
    "multiplicative": check_multiplicative,
    "hom-novikov": lambda A: check_hom_novikov(A.star_algebra()),
    "hnp": check_hnp,
    "hom-lie": lambda A: check_hom_lie(A.star_algebra()),
    "hom-poisson": check_hom_poisson,
    "admissible": C.is_admissible,
}

CONSTRUCTIONS = (
    "twist",
    "ntwist",
    "tensor",
    "perturb-diamond",
    "perturb-times",
    "perturb-combined",
    "minus",
)


class InputError(Exception):
    """Bad command-line input; reported with exit status 2."""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "machine"), default="text", help="human-readable text or JSON"
    )
    parser = argparse.ArgumentParser(
        prog="hnpkit", description="Exact checks and constructions for Hom-Novikov-Poisson algebras."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide an identity on an algebra file")
    p.add_argument("file")
    p.add_argument("--identity", required=True, choices=sorted(CHECKS))

    p = sub.add_parser("construct", parents=[common], help="build a new algebra from files")
    p.add_argument("construction", choices=CONSTRUCTIONS)
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--in2", metavar="FILE", help="second factor for tensor")
    p.add_argument("--beta", metavar="FILE", help="linear map file for twist")
    p.add_argument("--n", type=int, help="exponent for ntwist")
    p.add_argument("--a", metavar="VECTOR", help="comma-separated rationals")
    p.add_argument("--b", metavar="VECTOR", help="comma-separated rationals")
    p.add_argument("--out", required=True, metavar="FILE")

    p = sub.add_parser("verify", parents=[common], help="run the seeded theorem suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "machine":
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def cmd_check(args) -> int:
    A, names = load_algebra(args.file)
    try:
        report = CHECKS[args.identity](A)
    except C.HypothesisError as exc:
        _emit(args, f"FAIL {args.identity}: {exc}", {"identity": args.identity, "passed": False, "error": str(exc)})
        return EXIT_FAIL
    payload = report.to_dict()
    if names:
        payload["basis_names"] = names
    _emit(args, report.describe(names), payload)
    return EXIT_OK if report.passed else EXIT_FAIL


def _need(value, flag: str, construction: str):
    if value is None:
        raise InputError(f"{construction} needs {flag}")
    return value


def cmd_construct(args) -> int:
    A, names = load_algebra(args.input)
    kind = args.construction
    out_names = names
    try:
        if kind == "twist":
            B = C.yau_twist(A, load_map(_need(args.beta, "--beta", kind)))
        elif kind == "ntwist":
            n = _need(args.n, "--n", kind)
            if n < 0:
                raise InputError("--n must be non-negative")
            B = C.nth_twist(A, n)
        elif kind == "tensor":
            A2, names2 = load_algebra(_need(args.in2, "--in2", kind))
            B = C.tensor_product(A, A2)
            if names and names2:
                out_names = [f"{u}(x){v}" for u in names for v in names2]
            else:
                out_names = None
        elif kind == "minus":
            B = C.commutator_minus(A)
        else:
            a = parse_vector(_need(args.a, "--a", kind), A.dim, "--a")
            if kind == "perturb-diamond":
                B = C.perturb_diamond(A, a)
            elif kind == "perturb-times":
                B = C.perturb_times(A, a)
            else:
                b = parse_vector(_need(args.b, "--b", kind), A.dim, "--b")
                B = C.perturb_combined(A, a, b)
    except C.HypothesisError as exc:
        _emit(args, f"refused: {exc}", {"construction": kind, "ok": False, "error": str(exc)})
        return EXIT_FAIL
    save_algebra(args.out, B, out_names)
    _emit(args, f"wrote {kind} algebra of dimension {B.dim} to {args.out}",
          {"construction": kind, "ok": True, "dim": B.dim, "out": args.out})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.depth < 1:
        raise InputError("--depth must be at least 1")
    result = run_suite(args.seed, args.depth, fault=args.inject_fault)
    worst = result.minimal_failure()
    payload = result.to_dict()
    text = result.summary()
    if worst is not None:
        payload["minimal_offending_algebra"] = algebra_to_dict(worst.algebra)
        text += (
            f"\n\nsmallest offending algebra ({worst.theorem}, from {worst.origin}):\n"
            f"{worst.detail}\n{dumps_algebra(worst.algebra)}"
        )
    _emit(args, text, payload)
    return EXIT_OK if result.passed else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"check": cmd_check, "construct": cmd_construct, "verify": cmd_verify}[args.command]
    try:
        return handler(args)
    except (FormatError, InputError, DimensionMismatch, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
