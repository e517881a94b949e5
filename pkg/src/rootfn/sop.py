"""Cubes, prime implicants and irredundant sum-of-products covers."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .boolfn import TruthTable, true_indices


@dataclass(frozen=True)
class Cube:
    """Product term: ``care`` marks present literals, ``value`` their polarity."""

    arity: int
    care: int
    value: int

    def __post_init__(self):
        top = (1 << self.arity) - 1
        if self.care & ~top or self.value & ~self.care:
            raise ValueError(f"inconsistent cube care={self.care:b} value={self.value:b}")

    @classmethod
    def minterm(cls, arity: int, m: int) -> "Cube":
        return cls(arity, (1 << arity) - 1, m)

    @classmethod
    def parse(cls, text: str) -> "Cube":
        text = text.strip()
        if not text or set(text) - set("01-"):
            raise ValueError(f"not a cube: {text!r}")
        n = len(text)
        care = value = 0
        for pos, ch in enumerate(text):
            bit = 1 << (n - 1 - pos)
            if ch != "-":
                care |= bit
                if ch == "1":
                    value |= bit
        return cls(n, care, value)

    def __str__(self) -> str:
        chars = []
        for i in reversed(range(self.arity)):
            if not self.care >> i & 1:
                chars.append("-")
            else:
                chars.append("1" if self.value >> i & 1 else "0")
        return "".join(chars)

    @property
    def literal_count(self) -> int:
        return self.care.bit_count()

    def literals(self) -> list[int]:
        """1-based indices of variables present in the cube."""
        return [i + 1 for i in range(self.arity) if self.care >> i & 1]

    def has_positive(self, i: int) -> bool:
        return bool(self.value >> (i - 1) & 1)

    def drop(self, i: int) -> "Cube":
        bit = 1 << (i - 1)
        if not self.care & bit:
            raise ValueError(f"x_{i} is not a literal of {self}")
        return Cube(self.arity, self.care & ~bit, self.value & ~bit)

    @cached_property
    def mask(self) -> int:
        """Truth-table bits of the minterms covered by this cube."""
        free = [i for i in range(self.arity) if not self.care >> i & 1]
        out = 0
        for combo in range(1 << len(free)):
            m = self.value
            for j, i in enumerate(free):
                if combo >> j & 1:
                    m |= 1 << i
            out |= 1 << m
        return out

    def minterms(self) -> list[int]:
        return true_indices(self.mask)

    def contains(self, m: int) -> bool:
        return (m & self.care) == self.value

    def supercubes(self) -> Iterator["Cube"]:
        """Every cube obtained by deleting a subset of literals, itself included."""
        lits = [i for i in range(self.arity) if self.care >> i & 1]
        for r in range(len(lits) + 1):
            for drop in itertools.combinations(lits, r):
                dm = sum(1 << i for i in drop)
                yield Cube(self.arity, self.care & ~dm, self.value & ~dm)

    def sort_key(self) -> str:
        return str(self)


@dataclass(frozen=True)
class SopCover:
    arity: int
    terms: tuple[Cube, ...]

    @property
    def bits(self) -> int:
        out = 0
        for t in self.terms:
            out |= t.mask
        return out

    def function(self) -> TruthTable:
        return TruthTable(self.arity, self.bits)

    def __str__(self) -> str:
        return "\n".join(str(t) for t in self.terms)

    @classmethod
    def parse(cls, text: str, arity: int | None = None) -> "SopCover":
        terms = tuple(Cube.parse(line) for line in text.splitlines()
                      if line.strip() and not line.lstrip().startswith("#"))
        if terms:
            arity = terms[0].arity
            if any(t.arity != arity for t in terms):
                raise ValueError("cubes of mixed arity")
        elif arity is None:
            raise ValueError("empty cover needs an explicit arity")
        return cls(arity, terms)


def prime_implicants(f: TruthTable) -> set[Cube]:
    """All maximal cubes inside ``f``, by repeated merging of adjacent cubes."""
    n = f.arity
    current = {((1 << n) - 1, m) for m in true_indices(f.bits)}
    primes: set[tuple[int, int]] = set()
    while current:
        merged_into = set()
        nxt = set()
        by_care: dict[int, set[int]] = {}
        for care, value in current:
            by_care.setdefault(care, set()).add(value)
        for care, values in by_care.items():
            for value in values:
                for i in range(n):
                    bit = 1 << i
                    if care & bit and not value & bit and (value | bit) in values:
                        nxt.add((care & ~bit, value))
                        merged_into.add((care, value))
                        merged_into.add((care, value | bit))
        primes |= current - merged_into
        current = nxt
    return {Cube(n, care, value) for care, value in primes}


def _ordered_primes(f: TruthTable) -> list[Cube]:
    return sorted(prime_implicants(f), key=Cube.sort_key)


def _prune(terms: list[Cube], order: list[int]) -> list[Cube]:
    """Drop, in the given order, each term whose minterms the others cover."""
    keep = list(terms)
    for idx in order:
        t = terms[idx]
        rest = 0
        for u in keep:
            if u is not t:
                rest |= u.mask
        if t.mask & ~rest == 0:
            keep = [u for u in keep if u is not t]
    return keep


def _greedy_cover(f: TruthTable, primes: list[Cube]) -> list[Cube]:
    target = f.bits
    chosen: list[Cube] = []
    covered = 0
    # essential primes: sole cover of some true minterm
    for m in true_indices(target):
        holders = [p for p in primes if p.contains(m)]
        if len(holders) == 1 and holders[0] not in chosen:
            chosen.append(holders[0])
            covered |= holders[0].mask
    while covered != target:
        best = max(primes, key=lambda p: ((p.mask & ~covered).bit_count(), _neg_key(p)))
        chosen.append(best)
        covered |= best.mask
    return chosen


def _neg_key(c: Cube) -> tuple:
    # max() with this key prefers the lexicographically smallest cube string
    return tuple(-ord(ch) for ch in str(c))


def irredundant_cover(f: TruthTable) -> SopCover:
    """Essential primes, then greedy set cover, then a removal pass."""
    if not f.bits:
        return SopCover(f.arity, ())
    primes = _ordered_primes(f)
    chosen = _greedy_cover(f, primes)
    chosen.sort(key=Cube.sort_key)
    kept = _prune(chosen, list(range(len(chosen))))
    return SopCover(f.arity, tuple(kept))


def alternative_covers(f: TruthTable, limit: int = 64) -> Iterator[SopCover]:
    """Distinct irredundant covers, starting with ``irredundant_cover(f)``.

    Later covers come from pruning the full prime set in different orders;
    the sequence is deterministic.
    """
    first = irredundant_cover(f)
    yield first
    if not f.bits:
        return
    seen = {first.terms}
    primes = _ordered_primes(f)
    k = len(primes)
    base = list(range(k))
    orders = [base[r:] + base[:r] for r in range(k)]
    orders += [list(reversed(o)) for o in orders]
    for order in orders:
        if len(seen) >= limit:
            return
        kept = tuple(sorted(_prune(primes, order), key=Cube.sort_key))
        if kept not in seen:
            seen.add(kept)
            yield SopCover(f.arity, kept)


def verify_irredundant(f: TruthTable, cover: SopCover) -> bool:
    """Cover equals ``f`` and no term or literal can be deleted without changing it."""
    if cover.arity != f.arity:
        raise ValueError("arity mismatch")
    if cover.bits != f.bits:
        return False
    terms = list(cover.terms)
    for k, t in enumerate(terms):
        rest = 0
        for j, u in enumerate(terms):
            if j != k:
                rest |= u.mask
        if rest == f.bits:
            return False
        for i in t.literals():
            if t.drop(i).mask & ~f.bits == 0:
                return False
    return True
