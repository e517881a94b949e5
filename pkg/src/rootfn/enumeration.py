"""Exhaustive enumeration of root functions as maximal independent sets of Q_n.

The search walks the hypercube vertices in ascending index and decides each
one as chosen or excluded.  A vertex adjacent to a chosen vertex is forced out.
Once the last vertex of a closed neighbourhood has been decided, that
neighbourhood must contain a chosen vertex, otherwise the branch is dead.
Every leaf reached this way is an independent dominating set, so there is no
post-filtering and no duplicate output.
"""
from __future__ import annotations

import sys
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .boolfn import TruthTable, full_mask, root_size_bounds

GUARANTEED_MAX_N = 6
DEFAULT_SPLIT_DEPTH = 8


@dataclass(frozen=True)
class HypercubeGraph:
    n: int

    @property
    def order(self) -> int:
        return 1 << self.n

    def neighbors(self, v: int) -> list[int]:
        return [v ^ (1 << b) for b in range(self.n)]

    def closed_neighborhood(self, v: int) -> int:
        mask = 1 << v
        for b in range(self.n):
            mask |= 1 << (v ^ (1 << b))
        return mask

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.order):
            for b in range(self.n):
                u = v ^ (1 << b)
                if v < u:
                    yield v, u

    def is_independent(self, s: int) -> bool:
        return all(not (s >> v & 1 and s & (self.closed_neighborhood(v) ^ (1 << v)))
                   for v in range(self.order))

    def is_dominating(self, s: int) -> bool:
        covered = 0
        for v in range(self.order):
            if s >> v & 1:
                covered |= self.closed_neighborhood(v)
        return covered == full_mask(self.n)

    def is_maximal_independent(self, s: int) -> bool:
        if not self.is_independent(s):
            return False
        return not any(not s >> v & 1 and self.is_independent(s | 1 << v)
                       for v in range(self.order))


@dataclass
class Census:
    n: int
    per_cardinality: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.per_cardinality.values())

    def merge(self, other: "Census") -> "Census":
        if other.n != self.n:
            raise ValueError("cannot merge censuses of different n")
        merged = Counter(self.per_cardinality)
        merged.update(other.per_cardinality)
        return Census(self.n, dict(sorted(merged.items())))

    def as_dict(self) -> dict:
        return {"n": self.n,
                "per_cardinality": {str(k): v for k, v in sorted(self.per_cardinality.items())},
                "total": self.total}


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    g = HypercubeGraph(n)
    closed = tuple(g.closed_neighborhood(v) for v in range(g.order))
    # finished[v]: vertices whose whole closed neighbourhood is decided once v is
    finished = [0] * g.order
    for u in range(g.order):
        finished[max([u] + g.neighbors(u))] |= 1 << u
    return closed, tuple(finished)


def _check_n(n: int):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > GUARANTEED_MAX_N:
        warnings.warn(f"enumerating roots for n={n} exceeds desk scale (n <= {GUARANTEED_MAX_N})",
                      ResourceWarning, stacklevel=3)


def _prefixes(n: int, depth: int) -> list[tuple[int, int, int]]:
    """Live search states (next vertex, chosen, dominated) after ``depth`` decisions."""
    closed, finished = _tables(n)
    states = [(0, 0, 0)]
    for v in range(min(depth, 1 << n)):
        bit = 1 << v
        nxt = []
        for _, chosen, dom in states:
            fin = finished[v]
            if not dom & bit:
                d2 = dom | closed[v]
                if not fin & ~d2:
                    nxt.append((v + 1, chosen | bit, d2))
            if not fin & ~dom:
                nxt.append((v + 1, chosen, dom))
        states = nxt
    return states


def _search(n: int, start: int, chosen: int, dom: int, emit: Callable[[int], None]):
    closed, finished = _tables(n)
    size = 1 << n
    sys.setrecursionlimit(max(sys.getrecursionlimit(), size + 100))

    def rec(v, chosen, dom):
        if v == size:
            emit(chosen)
            return
        bit = 1 << v
        fin = finished[v]
        if dom & bit:
            if not fin & ~dom:
                rec(v + 1, chosen, dom)
            return
        d2 = dom | closed[v]
        if not fin & ~d2:
            rec(v + 1, chosen | bit, d2)
        if not fin & ~dom:
            rec(v + 1, chosen, dom)

    rec(start, chosen, dom)


def _collect(args) -> list[int]:
    n, state = args
    out: list[int] = []
    _search(n, *state, out.append)
    return out


def _count(args) -> dict[int, int]:
    n, state = args
    counts: Counter = Counter()

    def emit(chosen):
        counts[chosen.bit_count()] += 1

    _search(n, *state, emit)
    return dict(counts)


def iter_root_bits(n: int) -> Iterator[int]:
    """Root truth tables as raw bit vectors, in deterministic DFS order."""
    _check_n(n)
    for state in _prefixes(n, DEFAULT_SPLIT_DEPTH):
        yield from _collect((n, state))


def enumerate_roots(n: int, on_found: Callable[[TruthTable], None], jobs: int = 1,
                    split_depth: int = DEFAULT_SPLIT_DEPTH) -> None:
    """Call ``on_found`` once per root function of ``n`` variables.

    With ``jobs > 1`` subtrees are searched in worker processes; results are
    still delivered serially in the same order as a single-process run.
    """
    _check_n(n)
    tasks = [(n, s) for s in _prefixes(n, split_depth)]
    if jobs <= 1:
        for task in tasks:
            _search(n, *task[1], lambda b: on_found(TruthTable(n, b)))
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_collect, tasks):
            for b in chunk:
                on_found(TruthTable(n, b))


def all_roots(n: int, jobs: int = 1) -> list[TruthTable]:
    out: list[TruthTable] = []
    enumerate_roots(n, out.append, jobs=jobs)
    return out


def census(n: int, jobs: int = 1, split_depth: int = DEFAULT_SPLIT_DEPTH) -> Census:
    _check_n(n)
    tasks = [(n, s) for s in _prefixes(n, split_depth)]
    result = Census(n, {})
    if jobs <= 1:
        parts = map(_count, tasks)
        for part in parts:
            result = result.merge(Census(n, part))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_count, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                result = result.merge(Census(n, part))
    bounds = root_size_bounds(n)
    assert all(bounds.lower <= k <= bounds.upper for k in result.per_cardinality)
    return result


def min_root_size(n: int, jobs: int = 1) -> int:
    return min(census(n, jobs=jobs).per_cardinality)


def missing_cardinalities(n: int, jobs: int = 1, result: Census | None = None) -> set[int]:
    if result is None:
        result = census(n, jobs=jobs)
    lo = min(result.per_cardinality)
    hi = root_size_bounds(n).upper
    return {k for k in range(lo, hi + 1) if k not in result.per_cardinality}
