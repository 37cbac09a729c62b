#!/usr/bin/env python3
"""Audit the Riesz–Kantorovich supremum against the entrywise formula.

Two independent routes to (S ∨ T)x for positive x: the 2^dim vertex
enumeration over decompositions u + v = x (rk_oracle) and the closed-form
entrywise maximum (op_sup).  They must agree exactly on every random
trial; any mismatch is printed with the witnessing triple.

Usage:
    python scripts/rk_audit.py --trials 500 --seed 7
    python scripts/rk_audit.py --dims 2 3 4 5 6 --vectors 10
"""

import argparse
import random
import time
from fractions import Fraction

import latticealg as la
from latticealg import OperatorMatrix, vec


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=200, help="random (S, T) pairs")
    parser.add_argument("--vectors", type=int, default=5, help="positive x per pair")
    parser.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    parser.add_argument("--seed", type=int, default=20260826)
    parser.add_argument("--max-num", type=int, default=9, help="numerator bound")
    args = parser.parse_args()

    rng = random.Random(args.seed)

    def rand_scalar() -> Fraction:
        return Fraction(rng.randint(-args.max_num, args.max_num), rng.randint(1, 9))

    mismatches = 0
    checked = 0
    start = time.perf_counter()
    for trial in range(args.trials):
        dim = args.dims[trial % len(args.dims)]
        s = OperatorMatrix.from_rows([[rand_scalar() for _ in range(dim)] for _ in range(dim)])
        t = OperatorMatrix.from_rows([[rand_scalar() for _ in range(dim)] for _ in range(dim)])
        sup = la.op_sup(s, t)
        for _ in range(args.vectors):
            x = vec([abs(rand_scalar()) for _ in range(dim)])
            lhs = la.rk_oracle(s, t, x)
            rhs = sup.apply(x)
            checked += 1
            if lhs != rhs:
                mismatches += 1
                print(f"MISMATCH dim={dim} x={x.coords}")
                print(f"  vertex route: {lhs.coords}")
                print(f"  entrywise:    {rhs.coords}")
    elapsed = time.perf_counter() - start
    rate = checked / elapsed if elapsed else float("inf")
    print(
        f"{checked} comparisons over dims {sorted(set(args.dims))}: "
        f"{mismatches} mismatches ({elapsed:.2f}s, {rate:.0f}/s)"
    )
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
