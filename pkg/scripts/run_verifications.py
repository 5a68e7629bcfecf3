#!/usr/bin/env python3
"""Run every verification scenario and save the merged JSON report.

Usage:
    python scripts/run_verifications.py [--seed N] [--samples N] [--out FILE]
"""

import argparse
import json
import sys
import time

from fanocalc.scenarios import Context, catalog, load_golden, run_scenario


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--out", default="verification_report.json")
    args = parser.parse_args()

    golden = load_golden()
    reports = []
    t0 = time.time()
    for name, _ in catalog():
        ctx = Context(seed=args.seed, samples=args.samples, golden=golden)
        report = run_scenario(name, ctx)
        reports.append(report)
        print(f"{report.status:8s} {name}")
    merged = {
        "seed": args.seed,
        "samples": args.samples,
        "elapsed_seconds": round(time.time() - t0, 2),
        "reports": [r.to_json() for r in sorted(reports, key=lambda r: r.scenario)],
    }
    with open(args.out, "w") as handle:
        json.dump(merged, handle, indent=2)
    print(f"wrote {args.out} ({merged['elapsed_seconds']}s)")
    return 0 if all(r.status == "pass" for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
