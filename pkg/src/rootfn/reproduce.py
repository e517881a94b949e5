"""Published reference values and a one-shot check of each of them."""
from __future__ import annotations

from .boolfn import is_root, parse_truth_table
from .construct import catalog, lift
from .enumeration import census, missing_cardinalities
from .faultsim import audit_root_circuits, simulate, synthesize_root_and_faults, universal_module_experiment

# number of roots with k true minterms, per n
REFERENCE_CENSUS: dict[int, dict[int, int]] = {
    2: {2: 2},
    3: {2: 4, 4: 2},
    4: {4: 24, 5: 16, 8: 2},
    5: {8: 1140, 9: 320, 10: 176, 12: 32, 16: 2},
    6: {12: 320, 14: 9600, 15: 25920, 16: 736440, 17: 337920, 18: 116320, 19: 40320,
        20: 8320, 21: 3840, 22: 1856, 24: 480, 27: 64, 32: 2},
}
REFERENCE_TOTALS = {2: 2, 3: 6, 4: 42, 5: 1670, 6: 1281402}
REFERENCE_MIN_SIZE = {1: 1, 2: 2, 3: 2, 4: 4, 5: 8, 6: 12}
REFERENCE_MISSING = {4: {6, 7}, 5: {11, 13, 14, 15}, 6: {13, 23, 25, 26, 28, 29, 30, 31}}

SYNTH_TARGET = "0000,0001,0010,0011,0111,1011,1111,1101"
SYNTH_ROOT = "0000,0111,1011,1101,1110"
SYNTH_REPRESENTATIVES = {"0000", "1011", "1101"}
SYNTH_COMPLETION = {"0111", "1110"}

LIFT_STEPS = [
    ("000,111", 2, "0000,0111,1101,1010"),
    ("0000,0111,1101,1010", 1, "00000,00111,01101,01010,10001,10110,11100,11011"),
    ("00000,00111,01101,01010,10001,10110,11100,11011", 1,
     "000000,000111,001010,001101,010001,010110,011011,011100,"
     "100001,100110,101011,101100,110000,110111,111010,111101"),
]


def _claim(name: str, passed: bool, **detail) -> dict:
    return {"claim": name, "passed": bool(passed), **detail}


def reproduce_all(max_n: int = 6, jobs: int = 1) -> dict:
    claims = []
    censuses = {}
    for n in range(1, max_n + 1):
        censuses[n] = census(n, jobs=jobs)
    for n in range(2, max_n + 1):
        got = censuses[n].per_cardinality
        claims.append(_claim(f"census_n{n}", got == REFERENCE_CENSUS[n]
                             and censuses[n].total == REFERENCE_TOTALS[n],
                             expected=REFERENCE_CENSUS[n], got=got, total=censuses[n].total))
    mins = {n: min(c.per_cardinality) for n, c in censuses.items()}
    claims.append(_claim("min_root_sizes", all(mins[n] == REFERENCE_MIN_SIZE[n] for n in mins),
                         expected={n: REFERENCE_MIN_SIZE[n] for n in mins}, got=mins))
    for n in sorted(REFERENCE_MISSING):
        if n <= max_n:
            got = missing_cardinalities(n, result=censuses[n])
            claims.append(_claim(f"missing_sizes_n{n}", got == REFERENCE_MISSING[n],
                                 expected=sorted(REFERENCE_MISSING[n]), got=sorted(got)))

    for src, var, want in LIFT_STEPS:
        got = lift(parse_truth_table(src), var)
        claims.append(_claim(f"lift_{len(src.split(',')[0])}var_x{var}",
                             got == parse_truth_table(want), got=str(got)))
    for n in range(2, 8):
        claims.append(_claim(f"catalog_n{n}_roots", all(is_root(t) for _, t in catalog(n))))

    for n in (2, 3, 4):
        audit = audit_root_circuits(n)
        claims.append(_claim(f"no_faulty_root_n{n}", audit["passed"], roots=audit["roots"],
                             counterexamples=audit["counterexamples"]))

    target = parse_truth_table(SYNTH_TARGET)
    sc = synthesize_root_and_faults(target)
    claims.append(_claim(
        "synthesis_example",
        sc.root == parse_truth_table(SYNTH_ROOT)
        and {format(m, "04b") for m in sc.representatives} == SYNTH_REPRESENTATIVES
        and {format(m, "04b") for m in sc.completion} == SYNTH_COMPLETION
        and simulate(sc.circuit, sc.faults) == target,
        root=str(sc.root)))

    u3 = universal_module_experiment(3)
    produced = {m["name"]: m["non_roots_produced"] for m in u3["modules"]}
    claims.append(_claim("universal_modules_n3",
                         produced == {"C1": 118, "C2": 250} and u3["covers_all"], produced=produced))
    u4 = universal_module_experiment(4)
    claims.append(_claim("universal_triple_n4", u4["covers_all"], witness=u4["witness_triple"]))

    return {"max_n": max_n, "claims": claims, "all_passed": all(c["passed"] for c in claims)}

