"""Minterms, truth tables and the root-function predicates.

A truth table of ``n`` variables is stored as a Python int used as a bit
vector: bit ``m`` is the value of the function on minterm ``m``.  Variable
``x_i`` is bit ``i - 1`` of a minterm index, so the string form of a minterm
reads ``x_n ... x_1`` left to right, the same way K-map labels are written.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Minterm:
    index: int
    arity: int

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        if not 0 <= self.index < (1 << self.arity):
            raise ValueError(f"minterm index {self.index} out of range for n={self.arity}")

    @classmethod
    def parse(cls, text: str) -> "Minterm":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a minterm bit string: {text!r}")
        return cls(int(text, 2), len(text))

    @property
    def weight(self) -> int:
        """Number of uncomplemented variables in the minterm."""
        return self.index.bit_count()

    def __str__(self) -> str:
        return format(self.index, f"0{self.arity}b")


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int


@lru_cache(maxsize=None)
def _low_half_masks(n: int) -> tuple[int, ...]:
    """For each variable, the bit mask of minterms where that variable is 0."""
    size = 1 << n
    masks = []
    for i in range(n):
        step = 1 << i
        block = (1 << step) - 1
        mask = 0
        for start in range(0, size, 2 * step):
            mask |= block << start
        masks.append(mask)
    return tuple(masks)


@dataclass(frozen=True)
class TruthTable:
    arity: int
    bits: int

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        if self.bits < 0 or self.bits >> (1 << self.arity):
            raise ValueError(f"bit vector does not fit 2^{self.arity} cells")

    @classmethod
    def from_minterms(cls, arity: int, minterms: Iterable[int | Minterm]) -> "TruthTable":
        bits = 0
        for m in minterms:
            if isinstance(m, Minterm):
                if m.arity != arity:
                    raise ValueError(f"minterm {m} has arity {m.arity}, expected {arity}")
                m = m.index
            if not 0 <= m < (1 << arity):
                raise ValueError(f"minterm {m} out of range for n={arity}")
            bits |= 1 << m
        return cls(arity, bits)

    @classmethod
    def from_strings(cls, strings: Iterable[str], arity: int | None = None) -> "TruthTable":
        parsed = [Minterm.parse(s) for s in strings]
        if arity is None:
            if not parsed:
                raise ValueError("arity is required for an empty minterm list")
            arity = parsed[0].arity
        return cls.from_minterms(arity, parsed)

    @classmethod
    def constant(cls, arity: int, value: bool) -> "TruthTable":
        return cls(arity, full_mask(arity) if value else 0)

    @property
    def size(self) -> int:
        return 1 << self.arity

    def __call__(self, m: int | Minterm) -> bool:
        if isinstance(m, Minterm):
            m = m.index
        return bool(self.bits >> m & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(true_indices(self.bits))

    def true_minterms(self) -> list[Minterm]:
        return [Minterm(m, self.arity) for m in true_indices(self.bits)]

    def false_minterms(self) -> list[Minterm]:
        return [Minterm(m, self.arity) for m in true_indices(self.complement().bits)]

    def complement(self) -> "TruthTable":
        return TruthTable(self.arity, self.bits ^ full_mask(self.arity))

    def __or__(self, other: "TruthTable") -> "TruthTable":
        _same_arity(self, other)
        return TruthTable(self.arity, self.bits | other.bits)

    def __and__(self, other: "TruthTable") -> "TruthTable":
        _same_arity(self, other)
        return TruthTable(self.arity, self.bits & other.bits)

    def to_strings(self) -> list[str]:
        return [format(m, f"0{self.arity}b") for m in true_indices(self.bits)]

    def __str__(self) -> str:
        return format_truth_table(self)


def _same_arity(a, b):
    if a.arity != b.arity:
        raise ValueError(f"arity mismatch: {a.arity} vs {b.arity}")


def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


def true_indices(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def hamming_distance(a: Minterm, b: Minterm) -> int:
    _same_arity(a, b)
    return (a.index ^ b.index).bit_count()


def neighbors(m: Minterm) -> set[Minterm]:
    return {Minterm(m.index ^ (1 << i), m.arity) for i in range(m.arity)}


def cofactor(f: TruthTable, i: int, v: int) -> TruthTable:
    """Restrict ``f`` to ``x_i = v``; remaining variables keep their order."""
    n = f.arity
    if n < 2:
        raise ValueError("cofactor needs at least two variables")
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    if v not in (0, 1):
        raise ValueError(f"cofactor value must be 0 or 1, got {v}")
    bit = 1 << (i - 1)
    low = bit - 1
    out = 0
    for j in range(1 << (n - 1)):
        m = ((j & ~low) << 1) | (j & low) | (bit if v else 0)
        if f.bits >> m & 1:
            out |= 1 << j
    return TruthTable(n - 1, out)


def depends_on(f: TruthTable, i: int) -> bool:
    s = 1 << (i - 1)
    low = _low_half_masks(f.arity)[i - 1]
    return (f.bits & low) != ((f.bits >> s) & low)


def support(f: TruthTable) -> set[int]:
    return {i for i in range(1, f.arity + 1) if depends_on(f, i)}


def is_non_vacuous(f: TruthTable) -> bool:
    return all(depends_on(f, i) for i in range(1, f.arity + 1))


def dominated_mask(n: int, bits: int) -> int:
    """Cells adjacent to at least one true cell of ``bits``."""
    out = 0
    for i, low in enumerate(_low_half_masks(n)):
        s = 1 << i
        out |= ((bits & low) << s) | ((bits >> s) & low)
    return out


def isolated_bits(n: int, bits: int) -> bool:
    for i, low in enumerate(_low_half_masks(n)):
        if bits & low & (bits >> (1 << i)):
            return False
    return True


def maximal_bits(n: int, bits: int) -> bool:
    return (bits | dominated_mask(n, bits)) == full_mask(n)


def root_bits(n: int, bits: int) -> bool:
    # isolated + maximal already forces non-vacuity; the explicit check is cheap
    return (isolated_bits(n, bits) and maximal_bits(n, bits)
            and is_non_vacuous(TruthTable(n, bits)))


def dominators_of(f: TruthTable, m: Minterm) -> set[Minterm]:
    _same_arity(f, m)
    return {t for t in neighbors(m) if f(t)}


def essentially_dominated(f: TruthTable, m: Minterm) -> bool:
    if f(m):
        raise ValueError(f"{m} is a true minterm; essential domination is defined for false minterms")
    return len(dominators_of(f, m)) == 1


def is_isolated(f: TruthTable) -> bool:
    return isolated_bits(f.arity, f.bits)


def is_maximal(f: TruthTable) -> bool:
    return maximal_bits(f.arity, f.bits)


def is_root(f: TruthTable) -> bool:
    return is_non_vacuous(f) and is_isolated(f) and is_maximal(f)


def root_size_bounds(n: int) -> Bounds:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Bounds(lower=math.ceil((1 << n) / (n + 1)), upper=1 << (n - 1))


# -- text format -----------------------------------------------------------

def format_hex(f: TruthTable) -> str:
    digits = max(1, (1 << f.arity) // 4)
    return f"n={f.arity}:{f.bits:0{digits}x}"


def format_truth_table(f: TruthTable, style: str = "minterms") -> str:
    """Render ``f`` as a minterm list (``"000,111"``) or hex (``"n=3:81"``).

    Constant 0 has no minterm-list form and always renders as hex.
    """
    if style == "hex" or not f.bits:
        return format_hex(f)
    if style != "minterms":
        raise ValueError(f"unknown truth table style {style!r}")
    return ",".join(f.to_strings())


def parse_truth_table(text: str) -> TruthTable:
    text = text.strip()
    if text.startswith("n="):
        head, sep, digits = text.partition(":")
        if not sep:
            raise ValueError(f"hex truth table needs 'n=<arity>:<hex>', got {text!r}")
        arity = int(head[2:])
        digits = digits.strip().lower()
        if not digits or set(digits) - set("0123456789abcdef"):
            raise ValueError(f"bad hex digits in {text!r}")
        return TruthTable(arity, int(digits, 16))
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty truth table text")
    lengths = {len(p) for p in parts}
    if len(lengths) != 1:
        raise ValueError(f"minterms of mixed length in {text!r}")
    return TruthTable.from_strings(parts)
