#!/usr/bin/env python3
"""Run the property fuzzer from the command line and print a short
human-readable digest next to the JSON summary path.

Example:
    python scripts/run_fuzz.py --trials 500 --d-max 4 --n-max 10 --seed 31337
"""

import argparse
import json
import sys
import time

from conehelly.fuzzing import ALL_CHECKS, FuzzConfig, run_fuzz


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--checks", default=",".join(ALL_CHECKS))
    ap.add_argument("--out", default=None, help="write the JSON summary here")
    args = ap.parse_args()

    config = FuzzConfig(d_max=args.d_max, n_max=args.n_max, bound=args.bound,
                        trials=args.trials, seed=args.seed,
                        checks=tuple(args.checks.split(",")))
    t0 = time.perf_counter()
    summary = run_fuzz(config)
    elapsed = time.perf_counter() - t0

    print(f"{summary.trials_run} trials in {elapsed:.1f}s "
          f"({elapsed / max(summary.trials_run, 1) * 1000:.1f} ms/trial)")
    for name, count in summary.checks_passed.items():
        print(f"  {name:12s} passed {count}")
    if summary.reay_bases:
        print(f"  slowest Reay search: {summary.reay_max_seconds * 1000:.2f} ms "
              f"over {summary.reay_bases} bases")
    for f in summary.failures:
        print(f"  FAILED trial {f.trial} [{f.check}]: {f.message}")
    if args.out:
        payload = {
            "config": {"d_max": config.d_max, "n_max": config.n_max,
                       "bound": config.bound, "trials": config.trials,
                       "seed": config.seed, "checks": list(config.checks)},
            "checks_passed": summary.checks_passed,
            "failures": len(summary.failures),
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
        print(f"summary written to {args.out}")
    return 0 if summary.ok else 4


if __name__ == "__main__":
    sys.exit(main())
