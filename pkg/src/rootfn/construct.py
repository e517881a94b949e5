"""Explicit root functions: parity max-roots, the doubling lift, and a catalog."""
from __future__ import annotations

from .boolfn import TruthTable, is_root
from .symmetry import NpTransform, apply_transform


def parity_max_roots(n: int) -> tuple[TruthTable, TruthTable]:
    """Odd-parity and even-parity functions, the two roots with 2^(n-1) minterms."""
    if n < 2:
        raise ValueError(f"parity max-roots are defined here for n >= 2, got {n}")
    odd = [m for m in range(1 << n) if m.bit_count() % 2]
    even = [m for m in range(1 << n) if not m.bit_count() % 2]
    return TruthTable.from_minterms(n, odd), TruthTable.from_minterms(n, even)


def lift(r: TruthTable, i: int) -> TruthTable:
    """Root of n+1 variables: ``x'_{n+1} r + x_{n+1} r_i`` where ``r_i`` negates ``x_i``.

    The result has twice as many true minterms as ``r``.
    """
    n = r.arity
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    if not is_root(r):
        raise ValueError("lift requires a root function")
    flipped = apply_transform(r, NpTransform.negation(n, i))
    return TruthTable(n + 1, r.bits | (flipped.bits << (1 << n)))


def _tt(*strings: str) -> TruthTable:
    return TruthTable.from_strings(strings)


# Minterm strings read x_n ... x_1.
_CATALOG: dict[int, list[tuple[str, TruthTable]]] = {
    2: [
        ("xnor (min-root, max-root)", _tt("00", "11")),
        ("xor (min-root, max-root)", _tt("01", "10")),
    ],
    3: [
        ("min-root", _tt("000", "111")),
        ("max-root (odd parity)", _tt("001", "010", "100", "111")),
    ],
    4: [
        ("min-root", _tt("0000", "0111", "1101", "1010")),
        ("5-minterm root", _tt("0000", "0111", "1011", "1101", "1110")),
        ("max-root (odd parity)", parity_max_roots(4)[0]),
    ],
    5: [
        ("min-root", _tt("00000", "00111", "01101", "01010",
                         "10001", "10110", "11100", "11011")),
    ],
    6: [
        ("min-root", _tt("000000", "000111", "001100", "011010", "011001", "010100",
                         "101011", "100110", "100101", "110011", "111000", "111111")),
    ],
    7: [
        ("min-root", _tt("0001011", "0001100", "0010010", "0010101",
                         "0111000", "0111111", "0100001", "0100110",
                         "1000000", "1000111", "1011001", "1011110",
                         "1110011", "1110100", "1101010", "1101101")),
    ],
}


def catalog(n: int) -> list[tuple[str, TruthTable]]:
    if n not in _CATALOG:
        raise ValueError(f"catalog covers n = 2..7, got {n}")
    return list(_CATALOG[n])
