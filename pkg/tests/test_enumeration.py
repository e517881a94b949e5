import random

import pytest

from rootfn.boolfn import TruthTable, is_root, root_bits
from rootfn.enumeration import (
    Census,
    HypercubeGraph,
    all_roots,
    census,
    enumerate_roots,
    iter_root_bits,
    min_root_size,
    missing_cardinalities,
)
from rootfn.symmetry import all_transforms, apply_transform


def test_hypercube_graph():
    for n in range(1, 6):
        g = HypercubeGraph(n)
        assert g.order == 1 << n
        assert all(len(g.neighbors(v)) == n for v in range(g.order))
        edges = list(g.edges())
        assert len(edges) == n * (1 << (n - 1))
        # bipartite by weight parity
        assert all((u.bit_count() + v.bit_count()) % 2 == 1 for u, v in edges)


def _mis_equivalence_holds(g, s):
    ind = g.is_independent(s)
    return (ind and g.is_dominating(s)) == g.is_maximal_independent(s)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_independent_dominating_iff_maximal_independent_exhaustive(n):
    g = HypercubeGraph(n)
    for s in range(1 << g.order):
        assert _mis_equivalence_holds(g, s)


@pytest.mark.parametrize("n", [4, 5])
def test_independent_dominating_iff_maximal_independent_random(n):
    g = HypercubeGraph(n)
    rng = random.Random(n)
    for _ in range(300):
        # bias towards independent sets so both sides of the equivalence get exercised
        s = 0
        for v in rng.sample(range(g.order), g.order):
            if rng.random() < 0.8 and g.is_independent(s | 1 << v):
                s |= 1 << v
        assert _mis_equivalence_holds(g, s)
        assert _mis_equivalence_holds(g, rng.getrandbits(g.order))


def test_small_enumerations():
    assert set(all_roots(2)) == {TruthTable.from_strings(["01", "10"]),
                                 TruthTable.from_strings(["00", "11"])}
    assert len(all_roots(3)) == 6
    roots4 = all_roots(4)
    assert len(roots4) == 42 and all(is_root(r) for r in roots4)
    assert set(all_roots(1)) == {TruthTable(1, 1), TruthTable(1, 2)}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_equals_brute_force(n):
    brute = {b for b in range(1 << (1 << n)) if is_root(TruthTable(n, b))}
    found = [r.bits for r in all_roots(n)]
    assert len(found) == len(set(found))
    assert set(found) == brute


def test_enumeration_n5_all_roots_no_duplicates():
    found = list(iter_root_bits(5))
    assert len(found) == len(set(found)) == 1670
    assert all(root_bits(5, b) for b in found)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumerated_set_closed_under_np(n):
    roots = set(all_roots(n))
    for g in all_transforms(n):
        assert {apply_transform(r, g) for r in roots} == roots


def test_deterministic_order_and_parallel_agreement():
    a = [r.bits for r in all_roots(5)]
    b = [r.bits for r in all_roots(5)]
    assert a == b
    c = []
    enumerate_roots(5, lambda t: c.append(t.bits), jobs=2)
    assert c == a
    assert census(5, jobs=2).per_cardinality == census(5).per_cardinality


def test_split_depth_does_not_change_counts():
    base = census(4).per_cardinality
    for depth in (0, 1, 3, 16, 40):
        assert census(4, split_depth=depth).per_cardinality == base


@pytest.mark.parametrize("n,expected", [
    (4, {4: 24, 5: 16, 8: 2}),
    (5, {8: 1140, 9: 320, 10: 176, 12: 32, 16: 2}),
])
def test_census(n, expected):
    c = census(n)
    assert c.per_cardinality == expected
    assert c.total == sum(expected.values())


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_exactly_two_max_roots(n):
    assert census(n).per_cardinality[1 << (n - 1)] == 2


def test_min_root_size_and_missing():
    assert [min_root_size(n) for n in range(1, 6)] == [1, 2, 2, 4, 8]
    assert missing_cardinalities(4) == {6, 7}
    assert missing_cardinalities(5) == {11, 13, 14, 15}
    assert missing_cardinalities(3) == {3}


def test_census_merge():
    a = Census(3, {2: 1})
    b = Census(3, {2: 3, 4: 2})
    assert a.merge(b).per_cardinality == {2: 4, 4: 2}
    assert a.merge(b).total == 6
    with pytest.raises(ValueError):
        a.merge(Census(4, {}))


class _Stop(Exception):
    pass


def test_large_n_warns():
    found = []

    def first_only(t):
        found.append(t)
        raise _Stop

    with pytest.warns(ResourceWarning), pytest.raises(_Stop):
        enumerate_roots(7, first_only)
    assert is_root(found[0])
