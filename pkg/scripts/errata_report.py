#!/usr/bin/env python3
"""List the smallest counterexamples for each printed formula that fails,
next to the corrected form at the same indices.

    python scripts/errata_report.py [--mmax 4] [--nmax 4]
"""
import argparse

from hermite2.identities import DUAL_IDS, Status, SuiteConfig, Variant, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--mmax", type=int, default=4)
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--show", type=int, default=3, help="counterexamples per identity")
    args = ap.parse_args()

    cfg = SuiteConfig(m_max=args.mmax, n_max=args.nmax, r_max=0, nu_max=0, series_order=0,
                      exp_order=0, burchnall_cases=0, ids=DUAL_IDS,
                      addition_max=args.mmax + args.nmax)
    reports = run_suite(cfg)
    for identity in sorted(DUAL_IDS):
        mine = [r for r in reports if r.identity_id == identity]
        paper = [r for r in mine if r.variant is Variant.PAPER]
        fixed = [r for r in mine if r.variant is Variant.CORRECTED]
        fails = [r for r in paper if r.status is Status.FAIL]
        print(f"== {identity}: printed form fails {len(fails)}/{len(paper)}, "
              f"corrected form fails {sum(r.status is Status.FAIL for r in fixed)}/{len(fixed)}")
        for r in fails[: args.show]:
            print("   ", r.summary())


if __name__ == "__main__":
    main()
