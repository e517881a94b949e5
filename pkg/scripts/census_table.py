"""Print the root census for n = 1..N as a table, with timings.

    python scripts/census_table.py --max-n 6 --jobs 4
"""
import argparse
import time
from dataclasses import dataclass

from rootfn.enumeration import census, missing_cardinalities


@dataclass
class CensusConfig:
    max_n: int = 5
    jobs: int = 1


def main(cfg: CensusConfig):
    for n in range(1, cfg.max_n + 1):
        t0 = time.perf_counter()
        c = census(n, jobs=cfg.jobs)
        dt = time.perf_counter() - t0
        row = "  ".join(f"{k}:{v}" for k, v in sorted(c.per_cardinality.items()))
        missing = sorted(missing_cardinalities(n, result=c))
        print(f"n={n}  total={c.total}  ({dt:.1f}s)")
        print(f"    {row}")
        print(f"    min size {min(c.per_cardinality)}, absent sizes {missing or '-'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=CensusConfig.max_n)
    ap.add_argument("--jobs", type=int, default=CensusConfig.jobs)
    a = ap.parse_args()
    main(CensusConfig(a.max_n, a.jobs))
