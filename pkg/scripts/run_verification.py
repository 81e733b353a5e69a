"""Run the randomized property suite and print a residual table.

    python3 scripts/run_verification.py --trials 10000 --report out/report.json
"""

import argparse
import pathlib
import time

from lorentzplane.harness import CHARACTERS, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=10000)
    ap.add_argument("--character", choices=CHARACTERS, default="both")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--report", type=pathlib.Path, help="also write the JSON report here")
    args = ap.parse_args()

    cfg = SuiteConfig(seed=args.seed, trials=args.trials, character=args.character)
    t = time.perf_counter()
    report = run_suite(cfg, workers=args.workers)
    elapsed = time.perf_counter() - t

    print(f"{'property':28s} {'trials':>7s} {'max residual':>13s} {'tol':>7s}  ok")
    for p in report.properties:
        print(f"{p.name:28s} {p.trials:7d} {p.max_residual:13.3e} {p.tolerance:7.0e}  {'yes' if p.passed else 'NO'}")
    print(f"\n{args.trials} trials in {elapsed:.1f}s; generator counters:")
    for key, n in sorted(report.generator.items()):
        print(f"  {key}: {n}")

    if args.report:
        args.report.parent.mkdir(parents=True, exist_ok=True)
        args.report.write_text(report.to_json() + "\n")
    raise SystemExit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
