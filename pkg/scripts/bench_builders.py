#!/usr/bin/env python3
"""Time the four H_{m,n} constructions along the diagonal m = n and print a
small table (the CLI's `bench` subcommand emits the raw per-cell CSV)."""
import argparse
import time

from hermite2.hermite import BUILDERS, classical


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=30)
    ap.add_argument("--step", type=int, default=5)
    args = ap.parse_args()

    names = sorted(BUILDERS)
    print("k".rjust(4) + "".join(n.rjust(14) for n in names) + "   (ms for H_{k,k})")
    for k in range(0, args.kmax + 1, args.step):
        classical.cache_clear()
        row = []
        for name in names:
            t0 = time.perf_counter()
            BUILDERS[name](k, k)
            row.append((time.perf_counter() - t0) * 1e3)
        print(f"{k:4d}" + "".join(f"{t:14.2f}" for t in row))


if __name__ == "__main__":
    main()
