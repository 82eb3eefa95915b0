"""Command-line interface: ``bfss {validate,op,decide,laws}``.

Exit codes: 0 success, 1 I/O error, 2 validation or usage error,
3 law violation.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import algebra
from .dataset import load_dataset, serialize
from .decision import decide
from .errors import BFSSError, ParseError, ValidationError
from .laws import LAWS, MUTATIONS, run_laws
from .render import FORMATS, render

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_LAW = 3

UNARY_OPS = {"complement": algebra.soft_complement}
BINARY_OPS = {
    "restricted-intersection": algebra.soft_restricted_intersection,
    "extended-union": algebra.soft_extended_union,
    "extended-intersection": algebra.soft_extended_intersection,
    "restricted-union": algebra.soft_restricted_union,
    "and-product": algebra.soft_and,
    "or-product": algebra.soft_or,
}


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bfss", description="Bipolar fuzzy soft set algebra and score-table decisions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a dataset file")
    p.add_argument("--data", required=True, help="dataset JSON file")

    p = sub.add_parser("op", help="apply a soft set operation")
    p.add_argument("--op", required=True, choices=[*UNARY_OPS, *BINARY_OPS])
    p.add_argument("--lhs", required=True, help="left operand dataset")
    p.add_argument("--rhs", help="right operand dataset (binary operations)")
    p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("decide", help="rank objects by final score")
    p.add_argument("--data", required=True, help="dataset JSON file")
    p.add_argument("--params", help="comma-separated chosen parameters (default: all)")
    p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("laws", help="check algebraic laws on random instances")
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-objects", type=_positive_int, default=6)
    p.add_argument("--max-params", type=_positive_int, default=5)
    p.add_argument("--mutate", choices=sorted(MUTATIONS), help=argparse.SUPPRESS)
    return parser


def _error(kind: str, message) -> None:
    print(f"bfss: {kind}: {message}", file=sys.stderr)


def cmd_validate(args) -> int:
    s = load_dataset(args.data)
    print(f"{len(s.universe)} objects, {len(s)} parameters")
    return EXIT_OK


def cmd_op(args) -> int:
    lhs = load_dataset(args.lhs)
    if args.op in UNARY_OPS:
        if args.rhs:
            _error("usage", f"{args.op} takes only --lhs")
            return EXIT_INVALID
        result = UNARY_OPS[args.op](lhs)
    else:
        if not args.rhs:
            _error("usage", f"{args.op} needs --rhs")
            return EXIT_INVALID
        result = BINARY_OPS[args.op](lhs, load_dataset(args.rhs))
    text = serialize(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_decide(args) -> int:
    data = load_dataset(args.data)
    chosen = None
    if args.params is not None:
        chosen = [p.strip() for p in args.params.split(",") if p.strip()]
    report = decide(data, chosen)
    sys.stdout.write(render(report, args.format))
    return EXIT_OK


def cmd_laws(args) -> int:
    ops = MUTATIONS[args.mutate] if args.mutate else None
    report = run_laws(args.trials, args.seed, args.max_objects, args.max_params, ops=ops)
    width = max(len(law.name) for law in LAWS)
    for r in report.results:
        status = "ok" if r.ok else "FAIL"
        print(f"{r.name:<{width}}  pass={r.passed:<5} fail={r.failed:<5} skip={r.skipped:<5} {status}")
    if report.ok:
        print(f"all laws hold ({report.trials} trials, seed {report.seed})")
        return EXIT_OK
    for r in report.results:
        if r.ok:
            continue
        print(f"\ncounterexample for {r.name} (trial {r.trial}):")
        for k, operand in enumerate(r.counterexample):
            label = "FGH"[k] if k < 3 else f"X{k}"
            body = serialize(operand) if isinstance(operand, algebra.BipolarFuzzySoftSet) else str(operand)
            print(f"-- {label} --")
            print(body.rstrip("\n"))
    _error("law violation", ", ".join(r.name for r in report.results if not r.ok))
    return EXIT_LAW


COMMANDS = {"validate": cmd_validate, "op": cmd_op, "decide": cmd_decide, "laws": cmd_laws}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    try:
        return COMMANDS[args.command](args)
    except OSError as exc:
        _error("io", exc)
        return EXIT_IO
    except (ParseError, ValidationError) as exc:
        _error(type(exc).__name__, exc)
        return EXIT_INVALID
    except (BFSSError, ValueError) as exc:
        _error(type(exc).__name__, exc)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
