"""How many functions the circuits of a few roots can produce under faults."""
import argparse
import json
from dataclasses import dataclass

from rootfn.faultsim import universal_module_experiment


@dataclass
class UniversalConfig:
    n: int = 3


def main(cfg: UniversalConfig):
    report = universal_module_experiment(cfg.n)
    print(json.dumps(report, indent=2))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, choices=(3, 4), default=3)
    main(UniversalConfig(ap.parse_args().n))
