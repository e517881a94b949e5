"""Synthesize a root circuit plus faults for many target functions.

Sweeps every function of n variables (n <= 4), or a seeded random sample
for larger n, and tallies fault counts and root sizes.  Any target the
synthesizer cannot handle is printed as a counterexample.
"""
import argparse
import collections
import random
from dataclasses import dataclass

from rootfn.boolfn import TruthTable, format_truth_table
from rootfn.faultsim import SynthesisError, simulate, synthesize_root_and_faults


@dataclass
class SweepConfig:
    n: int = 4
    samples: int = 0  # 0 means exhaustive
    seed: int = 0


def targets(cfg: SweepConfig):
    if cfg.samples == 0:
        yield from range(1 << (1 << cfg.n))
        return
    rng = random.Random(cfg.seed)
    for _ in range(cfg.samples):
        yield rng.getrandbits(1 << cfg.n)


def main(cfg: SweepConfig):
    root_sizes = collections.Counter()
    fault_counts = collections.Counter()
    failures = 0
    for bits in targets(cfg):
        f = TruthTable(cfg.n, bits)
        try:
            sc = synthesize_root_and_faults(f)
        except SynthesisError as exc:
            failures += 1
            print("counterexample:", format_truth_table(f, "hex"), exc)
            continue
        assert simulate(sc.circuit, sc.faults) == f
        root_sizes[len(sc.root)] += 1
        fault_counts[len(sc.faults)] += 1
    print("root sizes used:", dict(sorted(root_sizes.items())))
    print("faults per scenario:", dict(sorted(fault_counts.items())))
    print("failures:", failures)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=SweepConfig.n)
    ap.add_argument("--samples", type=int, default=SweepConfig.samples)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = ap.parse_args()
    if a.n > 4 and a.samples == 0:
        ap.error("exhaustive sweep only for n <= 4; pass --samples")
    main(SweepConfig(a.n, a.samples, a.seed))
