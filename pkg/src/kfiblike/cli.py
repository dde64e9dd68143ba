"""Command-line front end.

Subcommands: ``gen`` (base sequences), ``transform`` (the four transform
families, by either route), ``gf`` (generating functions and expansions),
``binet`` (exact or floating closed forms), ``audit`` (run the claim
registry) and ``bench`` (compare evaluation strategies).

Exit status: 0 on success, 2 on usage errors, 1 on internal verification
failure (a ``--verify`` mismatch, a benchmark value mismatch, or an
implementation-class FAIL in the audit; published-source discrepancies do
not fail the process).

Behaviour is controlled entirely by flags plus two environment variables:
``KFIBLIKE_WIDTH`` (report width) and ``KFIBLIKE_COLOR`` (colour toggle for
the audit text report).  All big integers are printed as plain decimal
strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from itertools import islice
from typing import Iterable, List, Optional, Tuple

from .audit import run_audit
from .closedform import binet_closed, binet_float
from .genfunc import derived_gf, gf_expand, gf_str
from .ring import K, RingElem, elem_str
from .sequences import (
    iter_terms,
    k_fib,
    modified_k_fib,
    term_fast,
    term_iterative,
    terms,
)
from .transforms import (
    TransformKind,
    binomial_row,
    transform_direct,
    transform_recurrence,
)

FORMATS = ("plain", "csv", "json-lines", "bfile")

_KIND_BY_NAME = {kind.value: kind for kind in TransformKind}

DEFAULT_DIRECT_CAP = 2000


def _env_width() -> int:
    raw = os.environ.get("KFIBLIKE_WIDTH", "")
    try:
        return max(int(raw), 20)
    except ValueError:
        return 80


def _env_color() -> bool:
    return os.environ.get("KFIBLIKE_COLOR", "").strip().lower() in ("1", "true", "yes", "on")


def _emit_terms(values: Iterable[RingElem], fmt: str, out) -> None:
    """Stream indexed terms in the requested format; no full-list buffering."""
    if fmt == "plain":
        first = True
        for v in values:
            if not first:
                out.write(",")
            out.write(elem_str(v))
            first = False
        out.write("\n")
    elif fmt == "csv":
        out.write("n,value\n")
        for n, v in enumerate(values):
            out.write(f"{n},{elem_str(v)}\n")
    elif fmt == "json-lines":
        for n, v in enumerate(values):
            out.write(json.dumps({"index": n, "value": elem_str(v)}) + "\n")
    elif fmt == "bfile":
        for n, v in enumerate(values):
            out.write(f"{n} {elem_str(v)}\n")
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown format {fmt!r}")


def _check_k(parser: argparse.ArgumentParser, k: int) -> None:
    if k < 1:
        parser.error(f"--k must be >= 1, got {k}")


def _check_count(parser: argparse.ArgumentParser, count: int) -> None:
    if count < 0:
        parser.error(f"--count must be >= 0, got {count}")


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------

def _cmd_gen(args, parser, out) -> int:
    _check_k(parser, args.k)
    _check_count(parser, args.count)
    rec = modified_k_fib(args.k) if args.family == "modified" else k_fib(args.k)
    if args.fast:
        values: Iterable[RingElem] = (term_fast(rec, n) for n in range(args.count))
    else:
        values = islice(iter_terms(rec), args.count)
    _emit_terms(values, args.format, out)
    return 0


def _cmd_transform(args, parser, out) -> int:
    _check_k(parser, args.k)
    _check_count(parser, args.count)
    kind = _KIND_BY_NAME[args.kind]
    if args.verify:
        direct = [transform_direct(kind, args.k, n) for n in range(args.count)]
        rec_vals = terms(transform_recurrence(kind, args.k), args.count)
        if direct != rec_vals:
            bad = next(n for n, (d, r) in enumerate(zip(direct, rec_vals)) if d != r)
            print(
                f"verify: MISMATCH at n={bad}: direct {elem_str(direct[bad])}, "
                f"recurrence {elem_str(rec_vals[bad])}",
                file=sys.stderr,
            )
            return 1
        _emit_terms(direct, args.format, out)
        print(
            f"verify: direct sum and closed recurrence agree on {args.count} terms",
            file=sys.stderr,
        )
        return 0
    if args.method == "direct":
        values: Iterable[RingElem] = (
            transform_direct(kind, args.k, n) for n in range(args.count)
        )
    else:
        values = islice(iter_terms(transform_recurrence(kind, args.k)), args.count)
    _emit_terms(values, args.format, out)
    return 0


def _cmd_gf(args, parser, out) -> int:
    kind = _KIND_BY_NAME[args.kind]
    if args.symbolic:
        if args.k is not None:
            parser.error("choose either --k or --symbolic, not both")
        k: RingElem = K
    else:
        if args.k is None:
            parser.error("gf needs either --k or --symbolic")
        _check_k(parser, args.k)
        k = args.k
    gf = derived_gf(kind, k)
    out.write(gf_str(gf) + "\n")
    if args.count is not None:
        _check_count(parser, args.count)
        _emit_terms(gf_expand(gf, args.count), "plain", out)
    return 0


def _cmd_binet(args, parser, out) -> int:
    _check_k(parser, args.k)
    if args.n < 0:
        parser.error(f"--n must be >= 0, got {args.n}")
    rec = transform_recurrence(_KIND_BY_NAME[args.kind], args.k)
    if args.exact:
        out.write(elem_str(binet_closed(rec, args.n)) + "\n")
    else:
        out.write(repr(binet_float(rec, args.n)) + "\n")
    return 0


def _cmd_audit(args, parser, out) -> int:
    try:
        report = run_audit(
            k_min=args.k_min, k_max=args.k_max, n_max=args.n_max, symbolic=args.symbolic
        )
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "jsonl":
        out.write(report.to_jsonl())
    else:
        out.write(report.to_text(width=_env_width(), color=_env_color()))
    return 1 if report.has_implementation_failure else 0


def _time_call(fn, *fn_args) -> Tuple[float, RingElem]:
    t0 = time.perf_counter()
    value = fn(*fn_args)
    return time.perf_counter() - t0, value


def _cmd_bench(args, parser, out) -> int:
    _check_k(parser, args.k)
    ns = args.n if args.n else [1000, 10000, 100000]
    for n in ns:
        if n < 0:
            parser.error(f"--n must be >= 0, got {n}")
    kind = _KIND_BY_NAME[args.kind]
    rec = transform_recurrence(kind, args.k)
    out.write(f"benchmark: {args.kind} transform, k={args.k}\n")
    out.write(f"{'n':>10}  {'strategy':<14} {'seconds':>12}  {'digits':>8}  equal\n")
    all_equal = True
    for n in sorted(ns):
        t_iter, v_iter = _time_call(term_iterative, rec, n)
        rows = [("iterative", t_iter, v_iter, "ref")]
        t_fast, v_fast = _time_call(term_fast, rec, n)
        rows.append(("matrix-power", t_fast, v_fast, "yes" if v_fast == v_iter else "NO"))
        if n <= args.direct_cap:
            binomial_row(n)  # warm the shared row cache; its one-time build is not the sum
            t_dir, v_dir = _time_call(transform_direct, kind, args.k, n)
            rows.append(("direct-sum", t_dir, v_dir, "yes" if v_dir == v_iter else "NO"))
        else:
            rows.append(("direct-sum", None, None, ""))
        for name, secs, value, equal in rows:
            if secs is None:
                out.write(
                    f"{n:>10}  {name:<14} "
                    f"{'skipped (n > direct cap %d)' % args.direct_cap}\n"
                )
                continue
            digits = len(str(value))
            out.write(f"{n:>10}  {name:<14} {secs:>12.6f}  {digits:>8}  {equal}\n")
            if equal == "NO":
                all_equal = False
    if all_equal:
        out.write("values agree across all strategies that ran\n")
        return 0
    out.write("VALUE MISMATCH between strategies\n")
    return 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kfiblike",
        description="modified k-Fibonacci-like sequence, its binomial-family "
                    "transforms, and the audit of the published claims about them",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a base sequence")
    p.add_argument("family", choices=("modified", "kfib"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--fast", action="store_true",
                   help="use the logarithmic companion-matrix path per index")
    p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("transform", help="generate one of the four transforms")
    p.add_argument("kind", choices=tuple(_KIND_BY_NAME))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--method", choices=("direct", "recurrence"), default="recurrence")
    p.add_argument("--verify", action="store_true",
                   help="compute both routes and fail (exit 1) if they disagree")
    p.add_argument("--format", choices=FORMATS, default="plain")

    p = sub.add_parser("gf", help="print a generating function (and expansion)")
    p.add_argument("kind", choices=tuple(_KIND_BY_NAME))
    p.add_argument("--k", type=int)
    p.add_argument("--symbolic", action="store_true",
                   help="keep k as an indeterminate")
    p.add_argument("--count", type=int,
                   help="also print this many series coefficients")

    p = sub.add_parser("binet", help="closed-form value of a transform term")
    p.add_argument("kind", choices=tuple(_KIND_BY_NAME))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true",
                   help="exact Lucas-sequence value instead of double precision")

    p = sub.add_parser("audit", help="run the published-claim audit")
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--symbolic", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")

    p = sub.add_parser("bench", help="time iterative vs matrix-power vs direct-sum")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, action="append",
                   help="term index; repeatable (default: 1000, 10000, 100000)")
    p.add_argument("--kind", choices=tuple(_KIND_BY_NAME), default="binomial")
    p.add_argument("--direct-cap", type=int, default=DEFAULT_DIRECT_CAP,
                   help="largest n at which the definitional direct sum is timed")

    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "transform": _cmd_transform,
    "gf": _cmd_gf,
    "binet": _cmd_binet,
    "audit": _cmd_audit,
    "bench": _cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    # Terms grow far past CPython's default 4300-digit str() guard; decimal
    # output of arbitrary magnitude is part of this tool's contract.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](args, parser, sys.stdout)


def entry() -> None:
    try:
        code = main()
    except BrokenPipeError:
        # downstream consumer (e.g. | head) closed the pipe; exit quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        code = 1
    sys.exit(code)


if __name__ == "__main__":
    entry()
