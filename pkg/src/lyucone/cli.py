"""Command-line entry point.

Usage::

    lyucone SCRIPT [--format {text,json,csv}] [--k-range A..B]
            [--j-range A..B] [--audit]

Exit codes: 0 success, 1 input error (with a line/column diagnostic on
stderr), 2 internal inconsistency (a construction failed its own exactness
audit; this indicates a bug, not bad input).
"""

from __future__ import annotations

import argparse
import sys

from .errors import InternalInconsistencyError, LyuconeError, ScriptError
from .report import emit
from .runner import run_script
from .script import parse


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("ranges are written A..B")
    try:
        return int(lo), int(hi)
    except ValueError as err:
        raise argparse.ArgumentTypeError("ranges are written A..B") from err


def build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lyucone",
        description="Lyubeznik tables of cones over projective schemes, "
                    "from construction scripts.")
    ap.add_argument("script", help="path to a construction script")
    ap.add_argument("--format", choices=("text", "json", "csv"),
                    default="text", help="output format (default: text)")
    ap.add_argument("--k-range", type=_parse_range, default=None,
                    metavar="A..B", help="override the table k-range")
    ap.add_argument("--j-range", type=_parse_range, default=None,
                    metavar="A..B", help="override the table j-range")
    ap.add_argument("--audit", action="store_true",
                    help="replay exactness and Euler-characteristic audits "
                         "on every built presentation")
    ap.add_argument("--seed-free", action="store_true",
                    help="reserved; the pipeline has no randomness")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_argparser().parse_args(argv)
    if args.seed_free:
        print("--seed-free is reserved: the pipeline is deterministic and "
              "takes no seeds", file=sys.stderr)
        return 1
    try:
        with open(args.script, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as err:
        print(f"cannot read {args.script}: {err}", file=sys.stderr)
        return 1
    try:
        parsed = parse(source)
        report = run_script(parsed, krange=args.k_range, jrange=args.j_range,
                            audit=args.audit)
        payload = emit(report, args.format)
    except ScriptError as err:
        print(f"{args.script}: {err}", file=sys.stderr)
        return 1
    except InternalInconsistencyError as err:
        print(f"{args.script}: internal inconsistency: {err}", file=sys.stderr)
        return 2
    except LyuconeError as err:
        print(f"{args.script}: {err}", file=sys.stderr)
        return 1
    sys.stdout.buffer.write(payload)
    sys.stdout.buffer.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
