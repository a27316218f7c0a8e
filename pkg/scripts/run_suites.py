"""Run every verification suite with timing and print a one-line summary per suite."""

import argparse

from fibalg.suites import SUITES, SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--random-count", type=int, default=20)
    args = ap.parse_args()

    cfg = SuiteConfig(seed=args.seed, random_count=args.random_count, timing=True)
    total_ms = 0
    for name in SUITES:
        report = run_suite(name, cfg)
        total_ms += report.elapsed_ms
        status = "PASS" if report.passed else f"FAIL ({len(report.failures)})"
        print(f"{name:<18} {report.cases:>9} cases  {report.elapsed_ms:>6} ms  {status}")
    print(f"{'total':<18} {'':>9}        {total_ms:>6} ms")


if __name__ == "__main__":
    main()
