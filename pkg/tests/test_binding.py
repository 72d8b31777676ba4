"""Exact binding number, threshold decision, binding sets, toughness."""

import random
from fractions import Fraction

import pytest

from bindex.binding import (
    BindingResult,
    binding_below_threshold,
    binding_number_bruteforce,
    binding_number_flow,
    binding_sets_all,
    toughness_bruteforce,
)
from bindex.constructions import family_general
from bindex.graph import (
    DomainError,
    Graph,
    LimitError,
    complete,
    complete_bipartite,
    disjoint_union,
    double_nested,
    mask_of,
    vertices_of,
    BipartitionSpec,
)


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _random_graph(rng, n, p):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def test_small_anchors_brute():
    r = binding_number_bruteforce(path(3))
    assert r.value == Fraction(1, 2)
    assert r.witness == mask_of([0, 2])
    assert r.method == "brute"
    r = binding_number_bruteforce(cycle(5))
    assert r.value == Fraction(4, 3)
    assert r.witness == mask_of([0, 1, 3])
    r = binding_number_bruteforce(complete(7))
    assert r.value == 6
    assert r.witness == 1
    r = binding_number_bruteforce(complete_bipartite(7, 2))
    assert r.value == Fraction(2, 7)
    assert r.witness == (1 << 7) - 1


def test_construction_anchors():
    d = double_nested(BipartitionSpec((2, 3), (1, 2)))
    r = binding_number_bruteforce(d)
    assert r.value == Fraction(1, 3) and r.witness == mask_of([2, 3, 4])
    r = binding_number_bruteforce(family_general(10, 2, 1).graph)
    assert r.value == Fraction(1, 3) and r.witness == mask_of([7, 8, 9])
    r = binding_number_bruteforce(family_general(14, 1, 1).graph)
    assert r.value == Fraction(1, 2) and r.witness == mask_of([12, 13])
    r = binding_number_bruteforce(family_general(16, 1, 2).graph)
    assert r.value == Fraction(2, 3) and r.witness == mask_of([13, 14, 15])


def test_isolated_vertex_short_circuit():
    g = disjoint_union(complete(1), complete(2))
    for fn in (binding_number_bruteforce, binding_number_flow):
        r = fn(g)
        assert r.value == 0 and r.witness == 1
    h = disjoint_union(complete(2), complete(1))
    assert binding_number_flow(h).witness == 1 << 2  # least isolated vertex


def test_binding_sets_all():
    assert binding_sets_all(path(3)) == [0b101]
    assert binding_sets_all(complete(3)) == [0b001, 0b010, 0b100]
    sets = binding_sets_all(path(4))
    assert len(sets) == 7
    assert vertices_of(sets[0]) == (0,)
    assert binding_number_bruteforce(path(4)).value == 1
    sets = binding_sets_all(cycle(5))
    assert [vertices_of(m) for m in sets] == [
        (0, 1, 3), (0, 2, 3), (0, 2, 4), (1, 2, 4), (1, 3, 4)]
    assert binding_sets_all(complete(7)) == [1 << v for v in range(7)]


def test_binding_sets_recomputed_independently():
    # perfect matching on two components; expected list rebuilt by hand
    g = disjoint_union(complete(2), complete(2))
    expected = []
    for m in range(1, 1 << 4):
        nb = 0
        for v in range(4):
            if (m >> v) & 1:
                nb |= g.adj[v]
        if nb != 0b1111 and Fraction(nb.bit_count(), m.bit_count()) == 1:
            expected.append(m)
    expected.sort(key=vertices_of)
    assert binding_number_bruteforce(g).value == 1
    assert binding_sets_all(g) == expected
    assert len(expected) == 14


def test_threshold_decision():
    g = family_general(14, 1, 1).graph
    ok, w = binding_below_threshold(g, Fraction(1))
    assert ok and w == mask_of([12, 13])
    assert Fraction(g.neighborhood(w).bit_count(), w.bit_count()) == Fraction(1, 2)
    ok, w = binding_below_threshold(complete_bipartite(4, 4), Fraction(1))
    assert (ok, w) == (False, None)
    iso = disjoint_union(complete(1), complete(2))
    ok, w = binding_below_threshold(iso, Fraction(1, 1000))
    assert ok and w == 1
    with pytest.raises(DomainError):
        binding_below_threshold(g, Fraction(0))
    with pytest.raises(DomainError):
        binding_below_threshold(g, Fraction(-1, 2))


def test_flow_equals_brute_random():
    rng = random.Random(1009)
    for n in (8, 10, 12):
        for _ in range(1000):
            g = _random_graph(rng, n, rng.choice((0.15, 0.3, 0.5, 0.8)))
            rb = binding_number_bruteforce(g)
            rf = binding_number_flow(g)
            assert rf.value == rb.value, (n, g.adj)
            # both witnesses must achieve the value
            assert Fraction(
                g.neighborhood(rf.witness).bit_count(), rf.witness.bit_count()
            ) == rb.value


def test_flow_beyond_brute_cap():
    g = family_general(30, 2, 1).graph
    r = binding_number_flow(g)
    assert r.value == Fraction(1, 3)
    assert r.method == "flow"


def test_flow_anchors():
    assert binding_number_flow(complete_bipartite(7, 2)).value == Fraction(2, 7)
    d = double_nested(BipartitionSpec((2, 3), (1, 2)))
    assert binding_number_flow(d).value == Fraction(1, 3)


def test_limits():
    with pytest.raises(LimitError):
        binding_number_bruteforce(complete(25))
    with pytest.raises(LimitError):
        binding_sets_all(complete(21))
    with pytest.raises(LimitError):
        toughness_bruteforce(path(17))


def test_checked_witness_validation():
    k3 = complete(3)
    with pytest.raises(ValueError):
        BindingResult.checked(k3, 0, "brute")
    with pytest.raises(ValueError):
        BindingResult.checked(k3, 0b011, "brute")  # N(S) = V
    r = BindingResult.checked(k3, 0b001, "brute")
    assert r.value == 2 and r.witness_vertices == (0,)


def test_toughness_anchors():
    assert toughness_bruteforce(path(3)) == Fraction(1, 2)
    assert toughness_bruteforce(path(4)) == Fraction(1, 2)
    assert toughness_bruteforce(cycle(5)) == 1
    assert toughness_bruteforce(complete_bipartite(3, 3)) == 1
    assert toughness_bruteforce(disjoint_union(complete(2), complete(2))) == 0
    assert toughness_bruteforce(disjoint_union(complete(3), complete(2))) == 0
    assert toughness_bruteforce(family_general(8, 1, 1).graph) == Fraction(1, 3)
    with pytest.raises(DomainError):
        toughness_bruteforce(complete(5))


def test_binding_sets_independent_when_b_below_one():
    # holds for every graph with b < 1; spot-check plus random sweep
    for g in (path(3), family_general(10, 2, 1).graph):
        b = binding_number_bruteforce(g).value
        assert b < 1
        for s in binding_sets_all(g):
            assert g.is_independent(s)
    rng = random.Random(4001)
    seen = 0
    while seen < 200:
        g = _random_graph(rng, rng.randint(3, 8), 0.3)
        if binding_number_bruteforce(g).value >= 1:
            continue
        seen += 1
        for s in binding_sets_all(g):
            assert g.is_independent(s), g.adj


def test_binding_at_least_toughness_when_b_at_most_one():
    rng = random.Random(4002)
    seen = 0
    while seen < 200:
        g = _random_graph(rng, rng.randint(3, 9), 0.4)
        full = g.mask_all
        if all(row == full ^ (1 << v) for v, row in enumerate(g.adj)):
            continue
        b = binding_number_bruteforce(g).value
        if b > 1:
            continue
        seen += 1
        assert b >= toughness_bruteforce(g), g.adj


def test_one_sided_split_of_bipartite_binding_sets():
    # a binding set meeting both sides splits into two one-sided binding sets
    rng = random.Random(1009)
    seen = splits = 0
    while seen < 500:
        nx, ny = rng.randint(1, 4), rng.randint(1, 4)
        n = nx + ny
        adj = [0] * n
        for u in range(nx):
            for v in range(nx, n):
                if rng.random() < 0.55:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, adj)
        if not g.is_connected():
            continue
        seen += 1
        x, _ = g.bipartition()
        b = binding_number_bruteforce(g).value
        for s in binding_sets_all(g):
            sx, sy = s & x, s & ~x
            if sx == 0 or sy == 0:
                continue
            splits += 1
            for part in (sx, sy):
                assert g.neighborhood(part) != g.mask_all
                assert Fraction(
                    g.neighborhood(part).bit_count(), part.bit_count()) == b
    assert splits >= 10
