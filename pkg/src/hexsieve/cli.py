"""Command-line interface.

Verbs: primes, trace, element, classify, count, bounds, verify, det,
runs, bench.  Exit codes: 0 success, 1 failed verification, 2 usage or
cap errors.  All output is deterministic for fixed flags except the
wall-clock columns of ``bench``.
"""

import argparse
import sys

from . import bench, blocks, counting, grid, sieve, verify
from .errors import CapExceeded, HexsieveError

MAX_LIMIT = 2**32  # keeps every grid product inside 64 bits

USAGE_EXIT = 2
FAIL_EXIT = 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexsieve",
        description="Mod-6 wheel prime sieve and the grid of 6h±1 composites.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("primes", help="list all primes up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--format", choices=("list", "csv"), default="list")

    p = sub.add_parser("trace", help="CSV of crossed composites with stage and multiplicity")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--out", default="-", help="output file, '-' for stdout")

    p = sub.add_parser("element", help="grid entry at (row, col) with flags")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--col", type=int, required=True)

    p = sub.add_parser("classify", help="grid occurrences and flags of a value")
    p.add_argument("--value", type=int, required=True)
    p.add_argument("--max-row", type=int, default=1000)

    p = sub.add_parser("count", help="prime or prime-square counting function")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pi", type=float, metavar="X",
                       help="number of primes <= X")
    group.add_argument("--pi-mt", type=float, metavar="X",
                       help="number of squares of primes >= 5 that are <= X")

    p = sub.add_parser("bounds", help="square-count bounds report as CSV")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--constants", choices=sorted(counting.CONSTANT_PAIRS),
                   default="rosser-schoenfeld")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=("all", "core", "sieve", "counting", "matrix"),
                   default="all")
    p.add_argument("--limit", type=int, default=None,
                   help="suite size (block side, max sieve limit, or max x)")

    p = sub.add_parser("det", help="exact determinant of a square grid block")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--col", type=int, required=True)
    p.add_argument("--size", type=int, required=True)

    p = sub.add_parser("runs", help="CSV of defining-column runs and block verdicts")
    p.add_argument("--limit-col", type=int, required=True)

    p = sub.add_parser("bench", help="CSV timing report of sieve runs")
    p.add_argument("--limits", required=True,
                   help="comma-separated ascending limits, e.g. 100000,1000000")
    p.add_argument("--baseline", choices=("classic", "none"), default="classic")

    return parser


class _UsageError(Exception):
    pass


def _check_range(value: int, what: str, minimum: int = 1) -> None:
    if value < minimum:
        raise _UsageError(f"{what} must be >= {minimum}, got {value}")
    if value > MAX_LIMIT:
        raise _UsageError(
            f"{what} {value} exceeds {MAX_LIMIT} (64-bit product safety margin)")


def _usage(message: str) -> int:
    print(f"hexsieve: error: {message}", file=sys.stderr)
    return USAGE_EXIT


def _cmd_primes(args) -> int:
    _check_range(args.limit, "--limit")
    sep = ", " if args.format == "list" else ","
    if args.limit == 1:
        print("", end="")
        return 0
    if args.limit == 2:
        print("2")
        return 0
    if args.limit <= 4:
        print(sep.join(("2", "3")))
        return 0
    primes, _ = sieve.run_sieve(args.limit)
    print(sieve.format_primes(primes, sep))
    return 0


def _cmd_trace(args) -> int:
    _check_range(args.limit, "--limit", minimum=5)
    _, state = sieve.run_sieve(args.limit, trace=True)
    if args.out == "-":
        sieve.write_trace_csv(state, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            sieve.write_trace_csv(state, fh)
    return 0


def _cmd_element(args) -> int:
    _check_range(args.row, "--row")
    _check_range(args.col, "--col")
    e = grid.element(args.row, args.col)
    print(f"row={e.row} col={e.col} value={e.value} "
          f"defining={e.is_defining} leading={e.is_leading}")
    return 0


def _cmd_classify(args) -> int:
    _check_range(args.value, "--value")
    _check_range(args.max_row, "--max-row")
    occ = grid.occurrences(args.value, args.max_row)
    print(f"value={args.value} occurrences={len(occ)}")
    for o in occ:
        e = grid.element(o.row, o.col)
        print(f"row={o.row} col={o.col} defining={e.is_defining} leading={e.is_leading}")
    return 0


def _cmd_count(args) -> int:
    x = args.pi if args.pi is not None else args.pi_mt
    if x < 0 or x > MAX_LIMIT:
        return _usage(f"argument {x:g} outside [0, {MAX_LIMIT}]")
    if args.pi is not None:
        print(counting.prime_count(x))
    else:
        print(counting.prime_square_count(x))
    return 0


def _cmd_bounds(args) -> int:
    if args.x > MAX_LIMIT:
        return _usage(f"--x {args.x:g} exceeds {MAX_LIMIT}")
    row = counting.report_row(args.x, args.constants)
    counting.write_report_csv([row], sys.stdout)
    return 0


def _cmd_verify(args) -> int:
    if args.limit is not None:
        _check_range(args.limit, "--limit")
    results = verify.run_suite(args.suite, args.limit)
    failed = 0
    for label, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        print(f"{status} {label}: {detail}")
        failed += not ok
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return FAIL_EXIT if failed else 0


def _cmd_det(args) -> int:
    _check_range(args.row, "--row")
    _check_range(args.col, "--col")
    _check_range(args.size, "--size")
    block = blocks.submatrix(args.row, args.col, args.size, args.size)
    print(blocks.det(block))
    return 0


def _cmd_runs(args) -> int:
    _check_range(args.limit_col, "--limit-col", minimum=2)
    blocks.write_runs_csv(blocks.defining_runs(args.limit_col), sys.stdout)
    return 0


def _cmd_bench(args) -> int:
    try:
        limits = [int(part) for part in args.limits.split(",") if part]
    except ValueError:
        return _usage(f"--limits must be comma-separated integers, got {args.limits!r}")
    if not limits:
        return _usage("--limits is empty")
    for n in limits:
        _check_range(n, "bench limit", minimum=5)
    if limits != sorted(limits):
        return _usage("bench limits must be ascending")
    bench.write_csv(bench.run(limits, args.baseline), sys.stdout)
    return 0


_COMMANDS = {
    "primes": _cmd_primes,
    "trace": _cmd_trace,
    "element": _cmd_element,
    "classify": _cmd_classify,
    "count": _cmd_count,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
    "det": _cmd_det,
    "runs": _cmd_runs,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except _UsageError as exc:
        return _usage(str(exc))
    except CapExceeded as exc:
        return _usage(str(exc))
    except (HexsieveError, OverflowError, ValueError) as exc:
        return _usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
