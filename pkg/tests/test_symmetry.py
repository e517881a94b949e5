import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rootfn.boolfn import TruthTable, is_root
from rootfn.enumeration import all_roots
from rootfn.symmetry import (
    NpTransform,
    all_transforms,
    apply_transform,
    np_canonical,
    np_closure,
    np_orbit,
)


def tt(*strings):
    return TruthTable.from_strings(strings)


def brute_orbit(f):
    """Orbit by direct substitution f(g^-1(x)) over every input vector."""
    n = f.arity
    out = set()
    for perm in itertools.permutations(range(n)):
        for neg in range(1 << n):
            bits = 0
            for y in range(1 << n):
                # invert: y = permute(x ^ neg)
                x = 0
                for i, p in enumerate(perm):
                    if y >> p & 1:
                        x |= 1 << i
                x ^= neg
                if f(x):
                    bits |= 1 << y
            out.add(bits)
    return out


def transforms(n):
    return st.tuples(st.permutations(list(range(n))), st.integers(0, (1 << n) - 1)).map(
        lambda t: NpTransform(tuple(t[0]), t[1]))


def test_negation_example():
    assert apply_transform(tt("000", "111"), NpTransform.negation(3, 2)) == tt("010", "101")
    assert apply_transform(tt("01", "10"), NpTransform.negation(2, 1)) == tt("00", "11")


def test_identity():
    f = tt("0001", "0110", "1011")
    assert apply_transform(f, NpTransform.identity(4)) == f


def test_arity_mismatch():
    with pytest.raises(ValueError):
        apply_transform(tt("00", "11"), NpTransform.identity(3))


def test_bad_transform():
    with pytest.raises(ValueError):
        NpTransform((0, 0, 1))
    with pytest.raises(ValueError):
        NpTransform((0, 1), 4)


@settings(max_examples=200, derandomize=True)
@given(st.data())
def test_composition_law(data):
    n = data.draw(st.integers(1, 5))
    g = data.draw(transforms(n))
    h = data.draw(transforms(n))
    f = TruthTable(n, data.draw(st.integers(0, (1 << (1 << n)) - 1)))
    assert apply_transform(apply_transform(f, g), h) == apply_transform(f, h.compose(g))
    assert apply_transform(apply_transform(f, g), g.inverse()) == f


def test_orbit_examples():
    antipodal = {tt("000", "111"), tt("001", "110"), tt("010", "101"), tt("100", "011")}
    assert np_orbit(tt("000", "111")) == antipodal
    assert {t.bits for t in antipodal} == brute_orbit(tt("000", "111"))
    odd = tt("001", "010", "100", "111")
    assert np_orbit(odd) == {odd, odd.complement()}
    assert np_orbit(TruthTable.constant(3, False)) == {TruthTable.constant(3, False)}


def test_orbit_matches_brute_force():
    rng = random.Random(7)
    for n in (2, 3, 4):
        for _ in range(20):
            f = TruthTable(n, rng.getrandbits(1 << n))
            assert {t.bits for t in np_orbit(f)} == brute_orbit(f)
            group = (1 << n) * len(list(itertools.permutations(range(n))))
            assert group % len(np_orbit(f)) == 0


def test_canonical_examples():
    assert np_canonical(tt("01", "10")) == np_canonical(tt("00", "11"))
    assert np_canonical(tt("000", "111")) == np_canonical(tt("001", "110"))
    assert np_canonical(tt("000", "111")).bits == min(brute_orbit(tt("000", "111")))


@settings(max_examples=100, derandomize=True)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (1 << n)) - 1))))
def test_canonical_idempotent_and_orbit_constant(case):
    n, bits = case
    f = TruthTable(n, bits)
    c = np_canonical(f)
    assert np_canonical(c) == c
    assert c in np_orbit(f)
    assert c.bits == min(t.bits for t in np_orbit(f))


def test_canonical_n6_single_function():
    f = tt("000000", "000111", "001100", "011010", "011001", "010100",
           "101011", "100110", "100101", "110011", "111000", "111111")
    c = np_canonical(f)
    assert len(c) == 12 and is_root(c)


def test_orbit_refuses_large_n():
    with pytest.raises(ValueError):
        np_orbit(TruthTable(9, 1))


def test_rootness_and_cardinality_orbit_invariant_n3():
    for bits in range(256):
        f = TruthTable(3, bits)
        for g in all_transforms(3):
            h = apply_transform(f, g)
            assert is_root(h) == is_root(f)
            assert len(h) == len(f)


def test_n3_root_orbits_are_4_and_2():
    roots = set(all_roots(3))
    sizes = []
    while roots:
        orbit = np_orbit(next(iter(roots)))
        roots -= orbit
        sizes.append(len(orbit))
    assert sorted(sizes) == [2, 4]


def test_np_closure_matches_orbits():
    fs = [tt("000", "111"), tt("001", "011")]
    expected = set()
    for f in fs:
        expected |= {t.bits for t in np_orbit(f)}
    got = np_closure(3, np.array([f.bits for f in fs], dtype=np.uint64))
    assert set(got.tolist()) == expected
