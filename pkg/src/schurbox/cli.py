"""Command-line harness: verification sweeps and object enumeration.

Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import (
    CHECK_IDS,
    InvalidRangeError,
    RunConfig,
    UnknownCheckError,
    minimum_n,
    run_verification,
)
from .combinat import (
    column_strict_odd_pps,
    generating_function,
    partitions_in_box,
    symmetric_plane_partitions,
)

WORKERS_ENV = "SCHURBOX_WORKERS"


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        low = int(lo)
        high = int(hi) if sep else low
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    return (low, high)


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurbox",
        description="Exact verification of symmetric plane partition identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run identity checks over an (m, n) grid")
    verify.add_argument(
        "--checks",
        default="all",
        help=f"comma-separated ids from: {', '.join(CHECK_IDS)} (default: all)",
    )
    verify.add_argument("--m", type=_parse_range, default=(1, 3), metavar="LO..HI",
                        help="inclusive m range (default 1..3)")
    verify.add_argument("--n", type=_parse_range, default=(1, 3), metavar="LO..HI",
                        help="inclusive n range (default 1..3)")
    verify.add_argument("--output", choices=("text", "json"), default="text")
    verify.add_argument("--parallel", type=int, default=_default_workers(),
                        help=f"worker count (default ${WORKERS_ENV} or 1)")

    enum = sub.add_parser("enumerate", help="list objects and their generating function")
    enum.add_argument("kind", choices=("symmetric-pp", "column-strict", "partitions"))
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--m", type=int, required=True)
    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    config = RunConfig(
        checks=tuple(part.strip() for part in args.checks.split(",") if part.strip()),
        m_range=args.m,
        n_range=args.n,
        output=args.output,
        parallel=args.parallel,
    )
    try:
        results = run_verification(config)
    except (UnknownCheckError, InvalidRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    requested = CHECK_IDS if config.checks == ("all",) else config.checks
    for check_id in requested:
        if check_id in CHECK_IDS and minimum_n(check_id) > args.n[0]:
            skipped = [n for n in range(args.n[0], args.n[1] + 1) if n < minimum_n(check_id)]
            if skipped:
                print(
                    f"note: {check_id} needs n >= {minimum_n(check_id)}; "
                    f"skipped n = {', '.join(map(str, skipped))}",
                    file=sys.stderr,
                )

    if config.output == "json":
        print(json.dumps([r.to_json_dict() for r in results], indent=2))
    else:
        for r in results:
            m_text = "-" if r.m is None else str(r.m)
            status = "PASS" if r.passed else "FAIL"
            print(f"{r.identity:<12} m={m_text:<3} n={r.n:<3} {status}  {r.elapsed_ms:8.1f} ms")
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results)} checks, {len(results) - failed} passed, {failed} failed",
          file=sys.stderr)
    return 0 if failed == 0 else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.n < 0 or args.m < 0:
        print("error: bounds must be non-negative", file=sys.stderr)
        return 2
    if args.kind == "symmetric-pp":
        objects = list(symmetric_plane_partitions(args.n, args.m))
        payloads = [obj.to_json() for obj in objects]
    elif args.kind == "column-strict":
        objects = list(column_strict_odd_pps(args.n, args.m))
        payloads = [obj.to_json_dict() for obj in objects]
    else:
        objects = partitions_in_box(args.m, args.n)
        payloads = [obj.to_json() for obj in objects]
    for payload in payloads:
        print(json.dumps(payload, separators=(",", ":")))
    print(generating_function(objects).to_text())
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_enumerate(args)


if __name__ == "__main__":
    sys.exit(main())
