#!/usr/bin/env python3
"""Sample random quadric nets through the distinguished pencil over a range
of seeds and tabulate how often the determinantal septic splits cleanly as
the pencil line plus a squarefree sextic.

Usage:
    python scripts/net_split_statistics.py [--seeds N] [--samples N]
"""

import argparse
import random
import sys
from collections import Counter

from fanocalc.quadrics import sample_net_split


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--samples", type=int, default=20)
    args = parser.parse_args()

    overall = Counter()
    for seed in range(args.seeds):
        rng = random.Random(seed)
        outcomes = Counter()
        for _ in range(args.samples):
            run = sample_net_split(rng)
            if run["ok"]:
                outcomes["clean"] += 1
            elif not run.get("line_intersection_distinct", True):
                outcomes["repeated-intersection"] += 1
            else:
                outcomes["degenerate"] += 1
        overall.update(outcomes)
        print(f"seed {seed:3d}: {dict(outcomes)}")
    total = sum(overall.values())
    print(f"\ntotal over {total} nets: {dict(overall)}")
    print(f"clean fraction: {overall['clean'] / total:.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
