"""Input negation / permutation group acting on truth tables.

A transform first complements the variables in ``neg_mask`` and then moves
variable ``x_{i+1}`` to position ``perm[i] + 1`` (``perm`` is 0-based).
As a map on minterms, ``g(m) = permute(m ^ neg_mask)``, and the transformed
function is ``{g(m) : f(m) = 1}``, i.e. ``result(m) = f(g^-1(m))``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .boolfn import TruthTable, true_indices

MAX_ORBIT_ARITY = 8


@dataclass(frozen=True)
class NpTransform:
    perm: tuple[int, ...]
    neg_mask: int = 0

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"perm {self.perm} is not a permutation of 0..{n - 1}")
        if not 0 <= self.neg_mask < (1 << n):
            raise ValueError(f"neg_mask {self.neg_mask} out of range for n={n}")

    @property
    def arity(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "NpTransform":
        return cls(tuple(range(n)), 0)

    @classmethod
    def negation(cls, n: int, *variables: int) -> "NpTransform":
        """Complement the given 1-based variables."""
        mask = 0
        for i in variables:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} out of range 1..{n}")
            mask |= 1 << (i - 1)
        return cls(tuple(range(n)), mask)

    def map_minterm(self, m: int) -> int:
        x = m ^ self.neg_mask
        out = 0
        for i, p in enumerate(self.perm):
            if x >> i & 1:
                out |= 1 << p
        return out

    def compose(self, inner: "NpTransform") -> "NpTransform":
        """Return ``self ∘ inner`` (apply ``inner`` first)."""
        if inner.arity != self.arity:
            raise ValueError("arity mismatch")
        # self(inner(m)) = P_s(P_i(m ^ a) ^ b) = P_s P_i (m ^ a ^ P_i^-1 b)
        inv_inner = inner.inverse()
        neg = inner.neg_mask ^ inv_inner._permute(self.neg_mask)
        perm = tuple(self.perm[inner.perm[i]] for i in range(self.arity))
        return NpTransform(perm, neg)

    def inverse(self) -> "NpTransform":
        inv = [0] * self.arity
        for i, p in enumerate(self.perm):
            inv[p] = i
        inv = tuple(inv)
        # g^-1(y) = P^-1(y) ^ a
        return NpTransform(inv, self._permute(self.neg_mask))

    def _permute(self, x: int) -> int:
        out = 0
        for i, p in enumerate(self.perm):
            if x >> i & 1:
                out |= 1 << p
        return out


def all_transforms(n: int):
    for perm in itertools.permutations(range(n)):
        for neg in range(1 << n):
            yield NpTransform(perm, neg)


def apply_transform(f: TruthTable, g: NpTransform) -> TruthTable:
    if g.arity != f.arity:
        raise ValueError(f"transform arity {g.arity} != function arity {f.arity}")
    out = 0
    for m in true_indices(f.bits):
        out |= 1 << g.map_minterm(m)
    return TruthTable(f.arity, out)


def _guard(n: int):
    if n > MAX_ORBIT_ARITY:
        raise ValueError(f"orbit enumeration over 2^n*n! transforms refused for n={n} > {MAX_ORBIT_ARITY}")


def np_orbit(f: TruthTable) -> set[TruthTable]:
    _guard(f.arity)
    if f.arity <= 6:
        images = np.unique(apply_all_transforms(f.arity, np.array([f.bits], dtype=np.uint64)))
        return {TruthTable(f.arity, int(b)) for b in images}
    return {apply_transform(f, g) for g in all_transforms(f.arity)}


def np_canonical(f: TruthTable) -> TruthTable:
    """Orbit member with the smallest bit vector."""
    _guard(f.arity)
    if f.arity <= 6:
        return TruthTable(f.arity, int(apply_all_transforms(f.arity, np.array([f.bits], dtype=np.uint64)).min()))
    return min(np_orbit(f), key=lambda t: t.bits)


# -- batched form for n <= 6 (a truth table fits one uint64) ---------------

@lru_cache(maxsize=None)
def minterm_maps(n: int) -> np.ndarray:
    """Array of shape (2^n * n!, 2^n): row g holds g(m) for every minterm m."""
    size = 1 << n
    idx = np.arange(size)
    rows = []
    # row order matches all_transforms(): permutation outer, negation inner
    for perm in itertools.permutations(range(n)):
        permuted = np.zeros(size, dtype=np.uint64)
        for i, p in enumerate(perm):
            permuted |= ((idx >> i) & 1).astype(np.uint64) << np.uint64(p)
        for neg in range(size):
            rows.append(permuted[idx ^ neg])
    return np.array(rows, dtype=np.uint64)


def apply_batch(n: int, bits: np.ndarray, mapping: np.ndarray) -> np.ndarray:
    bits = np.asarray(bits, dtype=np.uint64)
    out = np.zeros_like(bits)
    one = np.uint64(1)
    for m in range(1 << n):
        out |= ((bits >> np.uint64(m)) & one) << mapping[m]
    return out


def apply_all_transforms(n: int, bits: np.ndarray) -> np.ndarray:
    """Images of every truth table in ``bits`` under every transform (flattened)."""
    if n > 6:
        raise ValueError("batched transforms need n <= 6")
    maps = minterm_maps(n)
    bits = np.asarray(bits, dtype=np.uint64)
    if len(bits) >= len(maps):
        return np.concatenate([apply_batch(n, bits, row) for row in maps])
    one = np.uint64(1)
    out = []
    for b in bits.tolist():
        img = np.zeros(len(maps), dtype=np.uint64)
        for m in true_indices(int(b)):
            img |= one << maps[:, m]
        out.append(img)
    return np.concatenate(out) if out else np.zeros(0, dtype=np.uint64)


def np_closure(n: int, bits: np.ndarray) -> np.ndarray:
    """Sorted unique union of the orbits of the given truth tables."""
    bits = np.unique(np.asarray(bits, dtype=np.uint64))
    if n <= 4:
        seen = np.zeros(1 << (1 << n), dtype=bool)
        for row in minterm_maps(n):
            seen[apply_batch(n, bits, row).astype(np.int64)] = True
        return np.flatnonzero(seen).astype(np.uint64)
    return np.unique(apply_all_transforms(n, bits))
