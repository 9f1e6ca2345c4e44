#!/usr/bin/env python3
"""Observed gap between the up-sweep and down-sweep counts.

No exact relationship between the two sweep counts is known; this
samples random permutations and reports the gap distribution, normalized
by the trace length.  Purely observational: nothing here is asserted by
the test suite.

Usage: python scripts/sweep_gap.py [--samples 200] [--max-n 80] [--seed 0]
"""

import argparse
import random
import sys

from bstbounds import random_permutation
from bstbounds.geometry import from_trace
from bstbounds.sweep import irb_down, irb_up


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=80)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    worst = 0.0
    total = 0.0
    print("n\tirb-up\tirb-down\tgap\tgap/m")
    for _ in range(args.samples):
        n = rng.randint(2, args.max_n)
        P = from_trace(random_permutation(n, rng.randrange(2**63)))
        up, down = irb_up(P), irb_down(P)
        gap = abs(up - down)
        per_access = gap / n
        worst = max(worst, per_access)
        total += per_access
        print(f"{n}\t{up}\t{down}\t{gap}\t{per_access:.3f}")
    print(
        f"# mean gap/m {total / args.samples:.3f}, worst gap/m {worst:.3f}",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
