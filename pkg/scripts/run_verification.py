"""Run every verification suite for a few seeds and write a JSON report.

    python3 scripts/run_verification.py --seeds 0 1 2 --jobs 4 --out results/verification.json
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from tropical_flags import suites


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, nargs="+", default=[0])
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", type=Path, default=Path("results/verification.json"))
    args = parser.parse_args()

    report = {"schema": "tropical-flags/1", "runs": []}
    ok = True
    for seed in args.seeds:
        start = time.perf_counter()
        checks = suites.run_all(seed, jobs=args.jobs)
        elapsed = time.perf_counter() - start
        print(f"seed {seed} ({elapsed:.1f} s)")
        for c in checks:
            print("  " + c.line())
        ok &= all(c.passed for c in checks)
        report["runs"].append({"seed": seed, "seconds": round(elapsed, 2),
                               "results": [c.to_json() for c in checks]})
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    print(f"wrote {args.out}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
