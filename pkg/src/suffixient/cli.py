"""Command-line entry point: ``suffixient {build,verify,stats,trace}``.

Exit status: 0 success, 1 verification failure, 2 input error, 3 size limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import formats
from .errors import InputError, SizeLimit
from .index import dump_arrays
from .oracle import EXHAUSTIVE_CAP, Oracle, exhaustive_min_size, is_colex_sorted, suffix_tree_height, verify_suffixient
from .pipeline import ENGINES, build_from_arrays, index_text
from .text import load_text, read_input, reverse_text
from .trace import TRACE_CAP, format_trace, trace, trace_as_dicts

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3
VERIFY_CAP = 2000


def _load(args):
    try:
        raw = read_input(args.input, args.format)
    except OSError as exc:
        raise InputError(str(exc)) from exc
    return load_text(raw, args.sentinel)


def _write(data, binary=False):
    if binary:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(data)


def cmd_build(args) -> int:
    start = time.perf_counter()
    text = _load(args)
    arrays = index_text(text)
    if args.dump_arrays:
        dump_arrays(arrays, args.dump_arrays)
    result = build_from_arrays(arrays, engine=args.engine)
    stats = result.stats
    stats.wall_time_ms = (time.perf_counter() - start) * 1e3
    if args.output == "json":
        _write(formats.to_json(result.array, text, stats, args.zero_based))
    elif args.output == "binary":
        _write(formats.to_binary(result.array, args.zero_based), binary=True)
    else:
        _write(formats.to_text(result.array, args.zero_based))
        base = "0-based" if args.zero_based else "1-based"
        print(f"chi={stats.chi} n={stats.n} sigma={stats.sigma} ({base} positions)", file=sys.stderr)
    return EXIT_OK


def _read_positions(path, zero_based):
    shift = 1 if zero_based else 0
    return [int(tok) + shift for tok in Path(path).read_text().split()]


def cmd_verify(args) -> int:
    text = _load(args)
    if text.n > args.verify_cap:
        raise SizeLimit(f"n = {text.n} exceeds --verify-cap {args.verify_cap}")
    if args.check_min and text.n > args.min_cap:
        raise SizeLimit(f"n = {text.n} exceeds --min-cap {args.min_cap} for the minimality check")

    checks: list[tuple[str, bool, str]] = []
    arrays = index_text(text)
    reference = build_from_arrays(arrays, engine="reference", check=True)
    fast = build_from_arrays(arrays, engine="fast")
    checks.append(("engines-agree", reference.array == fast.array, ""))

    if args.positions:
        positions = _read_positions(args.positions, args.zero_based)
        source = args.positions
    else:
        positions = reference.array.positions
        source = "builder"

    oracle = Oracle(text)
    full_l = oracle.full_l
    checks.append(("suffixient", verify_suffixient(text, positions, oracle.catalog), ""))
    checks.append(("fulll-equal", positions == full_l, f"|FullL|={len(full_l)}"))
    checks.append(("colex-order", is_colex_sorted(text, positions), ""))
    checks.append(("contains-n", text.n in positions, ""))
    if text.n <= args.min_cap:
        best = exhaustive_min_size(text, cap=args.min_cap)
        checks.append(("minimum-size", len(positions) == best, f"chi={len(positions)} min={best}"))

    failed = 0
    print(f"verify {args.input}: n={text.n} sigma={text.sigma} positions from {source}")
    for name, ok, note in checks:
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f" ({note})" if note else ""))
    if text.n > args.min_cap:
        print(f"SKIP minimum-size (n > --min-cap {args.min_cap})")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_stats(args) -> int:
    text = _load(args)
    arrays = index_text(text)
    result = build_from_arrays(arrays, engine=args.engine)
    doc = result.stats.as_dict()
    if text.n <= args.verify_cap:
        h = suffix_tree_height(reverse_text(text))
        doc["h"] = h
        doc["depth_within_bound"] = doc["stack_max_depth"] <= h + 1
    if args.output == "json":
        _write(json.dumps(doc, indent=2) + "\n")
    else:
        _write("".join(f"{k}={v}\n" for k, v in doc.items()))
    return EXIT_OK


def cmd_trace(args) -> int:
    text = _load(args)
    cols = trace(text, cap=args.trace_cap)
    if args.output == "json":
        _write(json.dumps(trace_as_dicts(text, cols), indent=2) + "\n")
    else:
        _write(format_trace(text, cols))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True, metavar="PATH")
    common.add_argument("--format", choices=("raw", "fasta"), default="raw")
    common.add_argument("--sentinel", choices=("append", "require"), default="append",
                        help="append a 0x00 sentinel (default) or require the last byte to be one")
    common.add_argument("--zero-based", action="store_true", help="print positions shifted to 0-based")

    parser = argparse.ArgumentParser(prog="suffixient", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="compute the suffixient array")
    p.add_argument("--output", choices=("text", "json", "binary"), default="text")
    p.add_argument("--engine", choices=ENGINES, default="fast")
    p.add_argument("--dump-arrays", metavar="PATH", help="also write SA/LCP/BWT of the reversed text")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="check the output against brute-force oracles")
    p.add_argument("--verify-cap", type=int, default=VERIFY_CAP, metavar="N")
    p.add_argument("--min-cap", type=int, default=EXHAUSTIVE_CAP, metavar="N")
    p.add_argument("--check-min", action="store_true",
                   help="require the exhaustive minimality check (size limit error above --min-cap)")
    p.add_argument("--positions", metavar="PATH", help="verify these positions instead of the builder's")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", parents=[common], help="report work counters")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--engine", choices=ENGINES, default="fast")
    p.add_argument("--verify-cap", type=int, default=VERIFY_CAP, metavar="N",
                   help="compute the suffix-tree height only up to this n")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("trace", parents=[common], help="print the per-iteration trace table")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--trace-cap", type=int, default=TRACE_CAP, metavar="N")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeLimit as exc:
        print(f"error: SizeLimit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except BrokenPipeError:
        # reader went away (e.g. `| head`); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
