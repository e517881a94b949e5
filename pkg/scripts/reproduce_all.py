"""Run every reference check and print one verdict per claim (same as `rootfn reproduce`)."""
import argparse
import sys

from rootfn.reproduce import reproduce_all

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    report = reproduce_all(max_n=a.max_n, jobs=a.jobs)
    for claim in report["claims"]:
        print(f"{'PASS' if claim['passed'] else 'FAIL'}  {claim['claim']}")
    sys.exit(0 if report["all_passed"] else 1)
