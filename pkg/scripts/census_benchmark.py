#!/usr/bin/env python3
"""Time the pair census across worker counts and check the counts agree."""

import argparse
import sys

import spairs as sp


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.strip())
    parser.add_argument("--n", type=int, default=3, help="block order (cap 3)")
    parser.add_argument(
        "--workers",
        type=int,
        nargs="+",
        default=[1, 2, 4],
        help="worker counts to compare",
    )
    parser.add_argument("--mode", choices=["unordered", "ordered"], default="unordered")
    args = parser.parse_args()

    print(f"block order {args.n}, mode {args.mode}")
    print(f"{'workers':>7}  {'seconds':>8}  {'unordered pairs':>16}")
    results = []
    for workers in args.workers:
        res = sp.run_census(args.n, workers=workers, mode=args.mode)
        results.append(res)
        print(f"{workers:>7}  {res.elapsed_seconds:>8.2f}  {res.unordered_pairs:>16}")

    counts = {(r.ordered_pairs, r.unordered_pairs) for r in results}
    if len(counts) != 1:
        print("worker counts DISAGREE", file=sys.stderr)
        return 3
    print("all worker counts agree")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
