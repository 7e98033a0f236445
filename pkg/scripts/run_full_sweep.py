#!/usr/bin/env python3
"""Run every identity check over a chosen grid and print a timing table.

The default desk-scale grid (m, n <= 3) finishes in well under a second;
pass --m-max/--n-max to push further and watch the factorial determinant
expansions and box-sum enumerations grow.
"""

import argparse
import sys

from schurbox.checks import RunConfig, run_verification


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m-max", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=3)
    parser.add_argument("--parallel", type=int, default=1)
    args = parser.parse_args()

    results = run_verification(
        RunConfig(("all",), (1, args.m_max), (1, args.n_max), parallel=args.parallel)
    )
    by_identity: dict[str, float] = {}
    for r in results:
        m_text = "-" if r.m is None else str(r.m)
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.identity:<12} m={m_text:<3} n={r.n:<3} {status}  {r.elapsed_ms:9.2f} ms")
        by_identity[r.identity] = by_identity.get(r.identity, 0.0) + r.elapsed_ms

    print()
    print("total time per identity:")
    for identity, ms in sorted(by_identity.items(), key=lambda kv: -kv[1]):
        print(f"  {identity:<12} {ms:9.2f} ms")
    failed = [r for r in results if not r.passed]
    print(f"\n{len(results)} checks, {len(failed)} failed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
