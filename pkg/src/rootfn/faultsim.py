"""Two-level AND-OR circuits under single and multiple stuck-at faults.

Fault sites of a circuit built from a cover:

* ``Stem(i)``          primary input ``x_i`` before fanout
* ``Branch(g, i)``     the literal of ``x_i`` feeding AND gate ``g``
* ``OrInput(g)``       output of AND gate ``g`` / input ``g`` of the OR gate
* ``OrOutput()``       the circuit output

Gate indices are 0-based positions in the cover; variable indices are 1-based.
A branch stuck at 1 deletes its literal (the term grows), a branch stuck at 0
kills the term.  A stem fault acts on every branch of its variable unless the
branch itself is faulty.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .boolfn import TruthTable, root_bits, true_indices
from .construct import catalog, parity_max_roots
from .sop import Cube, SopCover, alternative_covers, irredundant_cover, verify_irredundant

MAX_REACH_ARITY = 4
MAX_REACH_GATES = 16


@dataclass(frozen=True, order=True)
class Stem:
    var: int

    def __str__(self):
        return f"stem:{self.var}"


@dataclass(frozen=True, order=True)
class Branch:
    gate: int
    var: int

    def __str__(self):
        return f"branch:{self.gate},{self.var}"


@dataclass(frozen=True, order=True)
class OrInput:
    gate: int

    def __str__(self):
        return f"orin:{self.gate}"


@dataclass(frozen=True, order=True)
class OrOutput:
    def __str__(self):
        return "orout"


FaultSite = Union[Stem, Branch, OrInput, OrOutput]
FaultAssignment = dict  # FaultSite -> 0 | 1


class CircuitError(ValueError):
    pass


class SynthesisError(RuntimeError):
    def __init__(self, message: str, trace: list[str]):
        super().__init__(message)
        self.trace = trace


@dataclass(frozen=True)
class TwoLevelCircuit:
    arity: int
    gates: tuple[Cube, ...]

    def fault_sites(self) -> list[FaultSite]:
        sites: list[FaultSite] = [Stem(i) for i in range(1, self.arity + 1)]
        for g, cube in enumerate(self.gates):
            sites.extend(Branch(g, i) for i in cube.literals())
        sites.extend(OrInput(g) for g in range(len(self.gates)))
        sites.append(OrOutput())
        return sites

    def function(self) -> TruthTable:
        return SopCover(self.arity, self.gates).function()

    def gate_of_minterm(self, m: int) -> int:
        for g, cube in enumerate(self.gates):
            if cube.care == (1 << self.arity) - 1 and cube.value == m:
                return g
        raise KeyError(f"no full-minterm gate for {m:0{self.arity}b}")

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.gates)


@dataclass(frozen=True)
class FaultScenario:
    root: TruthTable
    circuit: TwoLevelCircuit
    faults: dict
    response: TruthTable
    representatives: tuple[int, ...] = ()
    completion: tuple[int, ...] = ()

    def __post_init__(self):
        if simulate(self.circuit, self.faults) != self.response:
            raise ValueError("scenario response does not match simulation")


def build_circuit(cover: SopCover) -> TwoLevelCircuit:
    if not cover.terms:
        raise CircuitError("empty cover (constant 0) has no two-level realization to fault")
    if not verify_irredundant(cover.function(), cover):
        raise CircuitError("cover is redundant; only irredundant circuits are modelled")
    return TwoLevelCircuit(cover.arity, tuple(cover.terms))


def _check_sites(c: TwoLevelCircuit, faults: dict):
    valid = set(c.fault_sites())
    for site, v in faults.items():
        if site not in valid:
            raise CircuitError(f"unknown fault site {site}")
        if v not in (0, 1):
            raise CircuitError(f"stuck value for {site} must be 0 or 1, got {v}")


def gate_effects(c: TwoLevelCircuit, faults: dict) -> list[Cube | None]:
    """Per gate: the cube it computes under ``faults``, or None if it is dead."""
    out: list[Cube | None] = []
    for g, cube in enumerate(c.gates):
        if faults.get(OrInput(g)) == 0:
            out.append(None)
            continue
        current = cube
        dead = False
        for i in cube.literals():
            v = faults.get(Branch(g, i))
            if v is None:
                s = faults.get(Stem(i))
                if s is not None:
                    v = s if cube.has_positive(i) else 1 - s
            if v is None:
                continue
            if v == 0:
                dead = True
                break
            current = current.drop(i)
        out.append(None if dead else current)
    return out


def simulate(c: TwoLevelCircuit, faults: dict | None = None) -> TruthTable:
    faults = faults or {}
    _check_sites(c, faults)
    n = c.arity
    if OrOutput() in faults:
        return TruthTable.constant(n, bool(faults[OrOutput()]))
    if any(isinstance(s, OrInput) and v == 1 for s, v in faults.items()):
        return TruthTable.constant(n, True)
    bits = 0
    for cube in gate_effects(c, faults):
        if cube is not None:
            bits |= cube.mask
    return TruthTable(n, bits)


def is_effective(c: TwoLevelCircuit, faults: dict) -> bool:
    """True if the faults change at least one gate or the OR gate."""
    if OrOutput() in faults or any(isinstance(s, OrInput) and v == 1 for s, v in faults.items()):
        return True
    return any(e != g for e, g in zip(gate_effects(c, faults), c.gates))


# -- reachable responses ---------------------------------------------------

def _gate_options(cube: Cube) -> list[int]:
    """Masks a gate can produce: dead, or any cube reached by deleting literals."""
    return [0] + [sc.mask for sc in cube.supercubes()]


def _union_product(values: np.ndarray, options: list[int], n: int) -> np.ndarray:
    if values.size == 0 or not options:
        return np.zeros(0, dtype=np.int64)
    seen = np.zeros(1 << (1 << n), dtype=bool)
    seen[(values[:, None] | np.asarray(options, dtype=np.int64)[None, :]).ravel()] = True
    return np.flatnonzero(seen)


def _reach_guard(c: TwoLevelCircuit):
    if c.arity > MAX_REACH_ARITY or len(c.gates) > MAX_REACH_GATES:
        raise CircuitError(
            f"reachable-set computation limited to n <= {MAX_REACH_ARITY} and "
            f"<= {MAX_REACH_GATES} gates (got n={c.arity}, {len(c.gates)} gates)")


def reachable_bits(c: TwoLevelCircuit) -> tuple[np.ndarray, np.ndarray]:
    """(all responses, responses of effective faults) as sorted bit-vector arrays.

    Each gate independently ends up dead or as one of its supercubes, so the
    reachable set is an iterated union-product over per-gate option lists.
    Stem, OR-input and OR-output faults produce nothing outside this set.
    """
    _reach_guard(c)
    n = c.arity
    clean = 0
    faulty = np.zeros(0, dtype=np.int64)
    for cube in c.gates:
        options = _gate_options(cube)
        changed = [o for o in options if o != cube.mask]
        faulty = np.union1d(_union_product(faulty, options, n),
                            _union_product(np.array([clean]), changed, n))
        clean |= cube.mask
    everything = np.union1d(faulty, [clean])
    return everything, faulty


def reachable_responses(c: TwoLevelCircuit) -> set[TruthTable]:
    everything, _ = reachable_bits(c)
    return {TruthTable(c.arity, int(b)) for b in everything}


def faulty_responses(c: TwoLevelCircuit) -> set[TruthTable]:
    _, faulty = reachable_bits(c)
    return {TruthTable(c.arity, int(b)) for b in faulty}


def root_circuit(r: TruthTable) -> TwoLevelCircuit:
    return build_circuit(irredundant_cover(r))


def audit_root_circuits(n: int, roots: Iterable[TruthTable] | None = None) -> dict:
    """Check that no effective fault in any root's circuit yields a root."""
    from .enumeration import all_roots

    if n > MAX_REACH_ARITY:
        raise CircuitError(f"audit limited to n <= {MAX_REACH_ARITY}")
    every_root = all_roots(n)
    roots = list(roots) if roots is not None else every_root
    # flag every root of Q_n, not only the audited ones
    is_root_flag = np.zeros(1 << (1 << n), dtype=bool)
    is_root_flag[[r.bits for r in every_root]] = True
    rows = []
    counterexamples = []
    for r in roots:
        c = root_circuit(r)
        everything, faulty = reachable_bits(c)
        hits = faulty[is_root_flag[faulty]]
        for h in hits:
            counterexamples.append({"root": str(r), "response": str(TruthTable(n, int(h)))})
        rows.append({"root": str(r), "gates": len(c.gates),
                     "reachable": int(everything.size), "faulty": int(faulty.size)})
    return {"n": n, "roots": len(roots), "passed": not counterexamples,
            "per_root": rows, "counterexamples": counterexamples}


# -- synthesis: target function as a faulty response of a root ----------------

def _default_root(n: int) -> TruthTable:
    if 2 <= n <= 7:
        return catalog(n)[0][1]
    if n == 1:
        return TruthTable(1, 0b01)
    return parity_max_roots(n)[1]


def _pick_representatives(cover: SopCover) -> list[int] | None:
    """One true minterm per term, pairwise at Hamming distance >= 2.

    Terms are tried smallest first.  A term's candidates start with minterms
    no other term covers, then fewest uncomplemented variables, then the
    higher index.
    """
    terms = list(cover.terms)
    order = sorted(range(len(terms)), key=lambda k: (terms[k].mask.bit_count(), str(terms[k])))
    candidates = {}
    for k in order:
        others = 0
        for j, t in enumerate(terms):
            if j != k:
                others |= t.mask
        cands = terms[k].minterms()
        candidates[k] = sorted(cands, key=lambda m: (bool(others >> m & 1), m.bit_count(), -m))
    picked: dict[int, int] = {}

    def ok(m):
        return all((m ^ p).bit_count() >= 2 for p in picked.values())

    def rec(pos):
        if pos == len(order):
            return True
        k = order[pos]
        for m in candidates[k]:
            if ok(m):
                picked[k] = m
                if rec(pos + 1):
                    return True
                del picked[k]
        return False

    if not rec(0):
        return None
    return [picked[k] for k in range(len(terms))]


def complete_to_root(n: int, chosen: Iterable[int]) -> tuple[int, list[int]]:
    """Extend an independent set to a maximal one, scanning vertices high to low."""
    bits = 0
    for m in chosen:
        bits |= 1 << m
    added = []
    for v in reversed(range(1 << n)):
        if bits >> v & 1:
            continue
        if not any(bits >> (v ^ (1 << b)) & 1 for b in range(n)):
            bits |= 1 << v
            added.append(v)
    return bits, sorted(added)


def synthesize_root_and_faults(target: TruthTable) -> FaultScenario:
    """Find a root and a fault set whose faulty response is ``target``."""
    n = target.arity
    if not target.bits:
        r = _default_root(n)
        c = root_circuit(r)
        faults = {OrInput(g): 0 for g in range(len(c.gates))}
        return FaultScenario(r, c, faults, target, (), ())
    if root_bits(n, target.bits):
        c = root_circuit(target)
        return FaultScenario(target, c, {}, target, tuple(true_indices(target.bits)), ())
    trace = []
    for cover in alternative_covers(target):
        reps = _pick_representatives(cover)
        if reps is None:
            trace.append(f"cover [{' + '.join(map(str, cover.terms))}]: no distance-2 representatives")
            continue
        root_mask, added = complete_to_root(n, reps)
        r = TruthTable(n, root_mask)
        c = root_circuit(r)
        faults = {}
        for term, m in zip(cover.terms, reps):
            g = c.gate_of_minterm(m)
            for i in range(1, n + 1):
                if not term.care >> (i - 1) & 1:
                    faults[Branch(g, i)] = 1
        for m in added:
            # a completion minterm already inside the target needs no fault
            if not target.bits >> m & 1:
                faults[OrInput(c.gate_of_minterm(m))] = 0
        return FaultScenario(r, c, faults, target, tuple(reps), tuple(added))
    raise SynthesisError(f"construction failed for {target}", trace)


# -- universal logic module experiment ----------------------------------------

def np_reach_closure(c: TwoLevelCircuit) -> np.ndarray:
    from .symmetry import np_closure

    everything, _ = reachable_bits(c)
    return np_closure(c.arity, everything.astype(np.uint64)).astype(np.int64)


def universal_module_experiment(n: int = 3) -> dict:
    """Which functions the circuits of a few root functions produce under faults.

    For n = 3 the modules are the circuits of {000,111} and of odd parity.
    For n = 4 a witnessing triple of NP-class representatives is searched.
    """
    from .enumeration import all_roots
    from .symmetry import np_canonical

    if n not in (3, 4):
        raise ValueError("universal module experiment supports n = 3 or 4")
    roots = all_roots(n)
    total = 1 << (1 << n)
    root_flag = np.zeros(total, dtype=bool)
    root_flag[[r.bits for r in roots]] = True
    non_roots = total - len(roots)

    def produced(r: TruthTable) -> np.ndarray:
        flags = np.zeros(total, dtype=bool)
        flags[np_reach_closure(root_circuit(r))] = True
        return flags

    report: dict = {"n": n, "functions": total, "roots": len(roots), "non_roots": non_roots}
    if n == 3:
        c1 = TruthTable.from_strings(["000", "111"])
        c2 = parity_max_roots(3)[0]
        f1, f2 = produced(c1), produced(c2)
        report["modules"] = [
            {"name": "C1", "root": str(c1), "non_roots_produced": int((f1 & ~root_flag).sum())},
            {"name": "C2", "root": str(c2), "non_roots_produced": int((f2 & ~root_flag).sum())},
        ]
        report["covers_all"] = bool((f1 | f2 | root_flag).all())
        return report

    reps = sorted({np_canonical(r).bits for r in roots})
    flags = {b: produced(TruthTable(n, b)) for b in reps}
    report["np_classes"] = [
        {"root": str(TruthTable(n, b)), "minterms": b.bit_count(),
         "non_roots_produced": int((flags[b] & ~root_flag).sum())} for b in reps]
    # smallest sufficient set size first, then any triple (a superset of a
    # sufficient pair still counts as a witness)
    def sufficient(combo):
        cover = root_flag.copy()
        for b in combo:
            cover |= flags[b]
        return bool(cover.all())

    smallest = next((size for size in (1, 2, 3)
                     if any(sufficient(c) for c in itertools.combinations(reps, size))), None)
    witness = next((c for c in itertools.combinations(reps, 3) if sufficient(c)), None)
    report["smallest_sufficient_set"] = smallest
    report["witness_triple"] = [str(TruthTable(n, b)) for b in witness] if witness else None
    report["covers_all"] = witness is not None
    return report


# -- fault file text format ----------------------------------------------------

_FAULT_RE = re.compile(
    r"^(?:stem:(?P<stem>\d+)|branch:(?P<bg>\d+),x?(?P<bv>\d+)'?|orin:(?P<orin>\d+)|(?P<orout>orout))"
    r"\s*=\s*(?P<val>[01])$")


def parse_faults(text: str) -> dict:
    faults: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        mt = _FAULT_RE.match(line)
        if not mt:
            raise ValueError(f"line {lineno}: cannot parse fault {raw!r}")
        if mt["stem"]:
            site = Stem(int(mt["stem"]))
        elif mt["bg"]:
            site = Branch(int(mt["bg"]), int(mt["bv"]))
        elif mt["orin"]:
            site = OrInput(int(mt["orin"]))
        else:
            site = OrOutput()
        v = int(mt["val"])
        if faults.get(site, v) != v:
            raise ValueError(f"line {lineno}: conflicting stuck values for {site}")
        faults[site] = v
    return faults


def format_faults(faults: dict) -> str:
    def key(site):
        return ({Stem: 0, Branch: 1, OrInput: 2, OrOutput: 3}[type(site)], str(site))
    return "\n".join(f"{site}={faults[site]}" for site in sorted(faults, key=key))
