"""Command-line interface.

Exit codes: 0 success / prime / all identities hold / no mismatches,
1 composite / identity violated / mismatch found, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import os
import sys

from primetri import bench, records
from primetri.errors import DomainError
from primetri.identities import identity_report
from primetri.modular import STRATEGIES, row_mod
from primetri.primality import METHODS, PrimalityVerdict, oracle_is_prime, test_theorem1, test_theorem2, verify_range
from primetri.triangle import check_index, row, rows

FORMAT_ENV = "PRIMETRI_FORMAT"
FORMATS = ("csv", "json")


def _default_format() -> str:
    fmt = os.environ.get(FORMAT_ENV, "csv").lower()
    return fmt if fmt in FORMATS else "csv"


def _cmd_row(args) -> int:
    if args.mod is not None:
        r = row_mod(args.n, args.mod, args.strategy)
    else:
        r = row(args.n)
    sys.stdout.write(records.row_record(r).render(args.format))
    return 0


def _cmd_triangle(args) -> int:
    check_index("N", args.N)
    if args.mod is not None:
        built = [row_mod(n, args.mod, args.strategy) for n in range(1, args.N + 1)]
    else:
        built = list(rows(args.N))
    rec = records.triangle_record(built, args.pad)
    sys.stdout.write(rec.render(args.format))
    return 0


def _cmd_is_prime(args) -> int:
    n = args.n
    if args.method == "theorem1":
        v = test_theorem1(n, full_scan=args.full_scan)
    elif args.method == "theorem2":
        v = test_theorem2(n, full_scan=args.full_scan)
    else:
        check_index("n", n, 2)
        v = PrimalityVerdict(n, "oracle", oracle_is_prime(n))
    sys.stdout.write(records.verdict_record(v, witness=args.witness).render(args.format))
    return 0 if v.is_prime else 1


def _cmd_verify(args) -> int:
    rep = verify_range(args.lo, args.hi, jobs=args.jobs)
    sys.stdout.write(records.verify_record(rep, args.jobs).to_json() + "\n")
    return 0 if rep.ok else 1


def _cmd_identities(args) -> int:
    rep = identity_report(args.n)
    sys.stdout.write(records.identity_record(rep).render(args.format))
    return 0 if all(rep.holds) else 1


def _cmd_fib(args) -> int:
    rec = records.fib_record(args.n)
    sys.stdout.write(rec.render(args.format))
    return 0 if rec.payload["holds"] else 1


def _cmd_bench(args) -> int:
    rec = bench.run_bench(args.max, args.samples, args.seed, args.repeats)
    text = rec.to_json() + "\n"
    if args.out == "-":
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    print(args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    fmt = _default_format()
    parser = argparse.ArgumentParser(prog="primetri", description="Prime-characterizing Pascal-analog triangle.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default=fmt, help=f"output format (default from ${FORMAT_ENV}, else csv)")

    p = sub.add_parser("row", help="print row n, optionally reduced mod m")
    p.add_argument("n", type=int)
    p.add_argument("--mod", type=int)
    p.add_argument("--strategy", choices=STRATEGIES, default="exact")
    add_format(p)
    p.set_defaults(func=_cmd_row)

    p = sub.add_parser("triangle", help="print rows 1..N")
    p.add_argument("N", type=int)
    p.add_argument("--pad", type=int, help="zero-pad every row to this width")
    p.add_argument("--mod", type=int)
    p.add_argument("--strategy", choices=STRATEGIES, default="exact")
    add_format(p)
    p.set_defaults(func=_cmd_triangle)

    p = sub.add_parser("is-prime", help="test n; exit 0 if prime, 1 if composite")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=METHODS, default="theorem1")
    p.add_argument("--witness", action="store_true", help="include the failing column for composites")
    p.add_argument("--full-scan", action="store_true", help="scan the whole row instead of half")
    add_format(p)
    p.set_defaults(func=_cmd_is_prime)

    p = sub.add_parser("verify", help="cross-check both tests against the oracle on [lo, hi]")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("identities", help="row-sum and alternating-sum identities for row n")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_identities)

    p = sub.add_parser("fib", help="F(n+1) from the rising diagonal with parameter n")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_fib)

    p = sub.add_parser("bench", help="time the three methods and write a JSON report")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--samples", type=int, default=bench.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=bench.DEFAULT_SEED)
    p.add_argument("--repeats", type=int, default=bench.DEFAULT_REPEATS)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
