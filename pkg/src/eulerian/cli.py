"""Command line entry point: ``poly``, ``verify`` and ``enumerate`` subcommands.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

Forest strings use nested parentheses: a forest is a sequence of trees and a
tree is ``(`` followed by the forest of its children and ``)``.  Whitespace is
ignored, so ``"(()())"`` is a root with two leaf children and ``"(())()"`` is
a two-vertex tree followed by an isolated vertex.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Callable, Iterable, Sequence

from . import forest as fo
from .genfunc import Polynomial
from .inversion import DOUBLED, PAPER_I, PAPER_IPRIME, SRule, ascent_polynomial, enumerate_inversion_sequences
from .parallel import default_jobs
from .signedperm import descent_polynomial, enumerate_even_signed, enumerate_signed_words, family_spec
from .verify import EQUIDISTRIBUTION_N, SCHEMA, SUITES, run_suite

# family -> (builder, largest n allowed without --allow-huge)
POLY_FAMILIES: dict[str, tuple[Callable[[int, int], Polynomial], int]] = {
    "I": (lambda n, j: ascent_polynomial(PAPER_I, n, jobs=j), 8),
    "Iprime": (lambda n, j: ascent_polynomial(PAPER_IPRIME, n, jobs=j), 8),
    "T": (lambda n, j: ascent_polynomial(DOUBLED, n, "ascD"), 7),
    "D": (lambda n, j: descent_polynomial("D", n), 7),
    "P": (lambda n, j: descent_polynomial("P", n, j), 4),
    "U": (lambda n, j: descent_polynomial("U", n, j), 4),
    "V": (lambda n, j: descent_polynomial("V", n, j), 4),
    "F": (lambda n, j: fo.forest_descent_polynomial("F_n-with-L", n), 4),
    "Fprime": (lambda n, j: fo.forest_descent_polynomial("F'_n-with-L'", n), 4),
    "G": (lambda n, j: fo.forest_descent_polynomial("F'_n-with-Lbar", n), 4),
}

# suites whose size bound is --n-max itself (the others only get capped by it)
HEAVY_SUITES = ("conj327", "thm31", "thm33", "all")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerian",
        description="Ascent/descent distributions over inversion sequences, signed permutations "
                    "and signed labeled forests, with exact identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--jobs", type=_positive, default=None,
                       help="worker processes (default: $EULERIAN_JOBS or 1)")
        p.add_argument("--allow-huge", action="store_true", help="lift the desk-scale size guards")

    p = sub.add_parser("poly", help="print a family polynomial, lowest degree first")
    p.add_argument("--family", required=True, choices=sorted(POLY_FAMILIES))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common(p)

    p = sub.add_parser("verify", help="run verification suites, one JSON report per line")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--n-max", type=_positive, default=None)
    p.add_argument("--T", type=_nonnegative, default=None, help="series truncation degree")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from reports")
    common(p)

    p = sub.add_parser("enumerate", help="stream combinatorial objects, one per line")
    p.add_argument("--kind", required=True, choices=("invseq", "signedword", "extension", "labeling"))
    p.add_argument("--rule", default=None, help="rule for invseq, e.g. paper-I or explicit:1,4,3")
    p.add_argument("--class", dest="cls", choices=("P", "U", "V", "D"), default=None)
    p.add_argument("--n", type=_nonnegative, default=None)
    p.add_argument("--forest", default=None, help='forest string such as "(()())"')
    p.add_argument("--labels", default=None,
                   help="signed labels in vertex preorder; extensions are then printed as words")
    p.add_argument("--family", choices=("L_Fn", "L_Fprime", "Lbar_Fprime"), default=None)
    p.add_argument("--limit", type=_nonnegative, default=None)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    return parser


def _emit_poly(family: str, n: int, p: Polynomial, fmt: str, out) -> None:
    coeffs = [str(c) for c in p.coeffs]
    if fmt == "plain":
        print(" ".join(coeffs), file=out)
    elif fmt == "json":
        print(json.dumps({"schema": SCHEMA, "family": family, "n": n, "coeffs": coeffs}), file=out)
    else:
        print("degree,coefficient", file=out)
        for k, c in enumerate(coeffs):
            print(f"{k},{c}", file=out)


def cmd_poly(args, out) -> int:
    build, guard = POLY_FAMILIES[args.family]
    if args.n > guard and not args.allow_huge:
        raise UsageError(f"family {args.family} with n={args.n} exceeds the size guard n<={guard}; "
                         "pass --allow-huge to run it anyway")
    _emit_poly(args.family, args.n, build(args.n, args.jobs), args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    if (args.suite in HEAVY_SUITES and args.n_max is not None and args.n_max > EQUIDISTRIBUTION_N
            and not args.allow_huge):
        raise UsageError(f"--n-max {args.n_max} > {EQUIDISTRIBUTION_N} enumerates over 10^8 objects per side; "
                         "pass --allow-huge to run it anyway")
    ok = True
    for report in run_suite(args.suite, n_max=args.n_max, T=args.T, jobs=args.jobs):
        ok &= report.passed
        print(report.to_json(timing=not args.no_timing), file=out, flush=True)
    return 0 if ok else 1


def _format_word(word: Sequence, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(list(word))
    return " ".join(str(a) for a in word)


def _format_vertex(v) -> str:
    return f"{v[0]}.{v[1]}"


def _stream(kind: str, args) -> Iterable[str]:
    fmt = args.format
    if kind == "invseq":
        if args.rule is None or args.n is None:
            raise UsageError("--kind invseq needs --rule and --n")
        try:
            rule = SRule.parse(args.rule)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return (_format_word(e.entries, fmt) for e in enumerate_inversion_sequences(rule, args.n))
    if kind == "signedword":
        if args.cls is None or args.n is None or args.n < 1:
            raise UsageError("--kind signedword needs --class and --n >= 1")
        if args.cls == "D":
            words = enumerate_even_signed(args.n)
        else:
            words = enumerate_signed_words(family_spec(args.cls, args.n))
        return (_format_word(w, fmt) for w in words)
    if kind == "extension":
        if args.forest is None:
            raise UsageError("--kind extension needs --forest")
        try:
            forest = fo.parse_forest(args.forest)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.labels is None:
            if fmt == "json":
                return (json.dumps([list(v) for v in ext]) for ext in fo.linear_extensions(forest))
            return (" ".join(_format_vertex(v) for v in ext) for ext in fo.linear_extensions(forest))
        try:
            labels = [int(a) for a in args.labels.replace(",", " ").split()]
        except ValueError:
            raise UsageError(f"--labels must be signed integers, got {args.labels!r}") from None
        if len(labels) != len(forest):
            raise UsageError(f"--labels gives {len(labels)} labels for a forest with {len(forest)} vertices")
        w = dict(zip(forest.vertices, labels))
        try:
            fo.check_labeling(forest, w)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return (_format_word(s, fmt) for s in fo.linear_extensions_labeled(forest, w))
    if kind == "labeling":
        if args.family is None or args.n is None or args.n < 1:
            raise UsageError("--kind labeling needs --family and --n >= 1")
        forest = fo.build_F_n(args.n) if args.family == "L_Fn" else fo.build_F_prime_n(args.n)
        return (_format_word([w[v] for v in forest.vertices], fmt) for w in fo.labelings(args.family, args.n))
    raise UsageError(f"unknown kind {kind}")


def cmd_enumerate(args, out) -> int:
    lines = _stream(args.kind, args)
    if args.limit is not None:
        lines = itertools.islice(lines, args.limit)
    try:
        for line in lines:
            print(line, file=out)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    return 0


COMMANDS = {"poly": cmd_poly, "verify": cmd_verify, "enumerate": cmd_enumerate}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"eulerian: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
