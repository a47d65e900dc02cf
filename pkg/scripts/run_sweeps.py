"""Stabilization tables H_{i+1}(sl_n(R)) against HC_i(R) / HH_i(R) for the shipped rings.

    python3 scripts/run_sweeps.py [--pair lie|leibniz|uce-lie|uce-leibniz] [--n-range 2..5] [--degree 2]
"""

import argparse
from pathlib import Path

from plusalg.fileformats import load_algebra
from plusalg.theories import PAIRS, stability_sweep

DATA = Path(__file__).resolve().parent.parent / "data"
RINGS = ["Q.alg", "dual_numbers.alg", "trunc_t3.alg", "upper2_Q.alg"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pair", choices=sorted(PAIRS), default="lie")
    ap.add_argument("--n-range", default="2..5")
    ap.add_argument("--degree", type=int, default=2)
    ap.add_argument("--budget", type=int, default=None)
    ap.add_argument("rings", nargs="*", help="algebra files (default: shipped rings)")
    args = ap.parse_args()
    lo, hi = map(int, args.n_range.split(".."))
    paths = args.rings or [DATA / r for r in RINGS]
    for path in paths:
        r = load_algebra(path)
        t = stability_sweep(r, args.pair, range(lo, hi + 1), args.degree, budget=args.budget)
        print(t.to_tsv())


if __name__ == "__main__":
    main()
