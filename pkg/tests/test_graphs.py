import math
import random
from itertools import combinations_with_replacement

import pytest

from graphinv.errors import LengthMismatch, LoopEdge, OddDegreeSum, OddVertexCount, VertexCountMismatch
from graphinv.graphs import (
    Graph,
    WeightVector,
    canonicalize,
    crossing_pairs,
    edges_cross,
    enumerate_matchings,
    enumerate_noncrossing,
    epsilon,
    graph_from_json,
    graph_to_json,
    multiply,
    noncrossing_matchings,
)


def geometric_cross(n, e, f):
    # independent oracle: do the two chords of the regular n-gon intersect
    # in their interiors?
    if set(e) & set(f):
        return False

    def pt(v):
        return (math.cos(2 * math.pi * v / n), math.sin(2 * math.pi * v / n))

    def orient(p, q, r):
        val = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        return 0 if abs(val) < 1e-12 else (1 if val > 0 else -1)

    a, b = pt(e[0]), pt(e[1])
    c, d = pt(f[0]), pt(f[1])
    return orient(a, b, c) != orient(a, b, d) and orient(c, d, a) != orient(c, d, b)


def brute_force_noncrossing(n, degree):
    # independent oracle: distribute edge multiplicities over all vertex
    # pairs, keep realizations of the multidegree, filter crossings
    pairs = list(combinations_with_replacement(range(1, n + 1), 2))
    pairs = [(a, b) for a, b in pairs if a != b]
    total = sum(degree) // 2
    found = []

    def rec(idx, left, chosen):
        if sum(left) == 0:
            g = Graph(n, [p for p, m in chosen for _ in range(m)])
            if not crossing_pairs(g):
                found.append(g)
            return
        if idx == len(pairs):
            return
        a, b = pairs[idx]
        cap = min(left[a - 1], left[b - 1])
        for m in range(cap + 1):
            left[a - 1] -= m
            left[b - 1] -= m
            rec(idx + 1, left, chosen + [((a, b), m)] if m else chosen)
            left[a - 1] += m
            left[b - 1] += m

    rec(0, list(degree), [])
    return sorted(found)


def test_graph_validation():
    with pytest.raises(LoopEdge):
        Graph(4, [(2, 2)])
    with pytest.raises(ValueError):
        Graph(4, [(1, 5)])
    with pytest.raises(ValueError):
        Graph(0)
    g = Graph(3, [(3, 1), (1, 2)])
    assert g.edges == ((3, 1), (1, 2))  # order and orientation preserved


def test_graph_equality_ignores_edge_order_but_not_orientation():
    assert Graph(4, [(1, 2), (3, 4)]) == Graph(4, [(3, 4), (1, 2)])
    assert Graph(4, [(2, 1)]) != Graph(4, [(1, 2)])
    assert hash(Graph(4, [(1, 2), (3, 4)])) == hash(Graph(4, [(3, 4), (1, 2)]))


def test_multidegree_and_regularity():
    g = Graph(4, [(1, 2), (1, 3), (1, 4)])
    assert g.multidegree() == (3, 1, 1, 1)
    assert g.regular_valence() is None
    cyc = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert cyc.regular_valence() == 2
    assert multiply(g, cyc).multidegree() == (5, 3, 3, 3)
    with pytest.raises(VertexCountMismatch):
        multiply(g, Graph(6))


def test_canonicalize_sign_counts_flips():
    g = Graph(4, [(3, 1), (2, 4)])
    cg, sign = canonicalize(g)
    assert cg.edges == ((1, 3), (2, 4))
    assert sign == -1
    g2 = Graph(4, [(3, 1), (4, 2)])
    assert canonicalize(g2).sign == 1
    assert canonicalize(canonicalize(g2).graph).sign == 1


def test_edges_cross_matches_geometry():
    rng = random.Random(71)
    for n in (4, 5, 6, 8, 9, 12):
        for _ in range(200):
            e = tuple(rng.sample(range(1, n + 1), 2))
            f = tuple(rng.sample(range(1, n + 1), 2))
            assert edges_cross(e, f) == geometric_cross(n, e, f), (n, e, f)


def test_crossing_pairs_indexes_in_lex_order():
    g = Graph(6, [(1, 4), (2, 5), (3, 6)])
    assert crossing_pairs(g) == [(0, 1), (0, 2), (1, 2)]
    assert Graph(6, [(1, 2), (3, 4), (5, 6)]).is_noncrossing()
    assert Graph(6, [(1, 4), (2, 3), (5, 6)]).is_noncrossing()
    assert not Graph(6, [(1, 4), (2, 5), (3, 6)]).is_noncrossing()


def test_enumerate_noncrossing_agrees_with_brute_force():
    cases = [
        (4, (1, 1, 1, 1)),
        (4, (2, 2, 2, 2)),
        (5, (2, 1, 1, 1, 1)),
        (5, (2, 2, 1, 2, 1)),
        (6, (1, 1, 1, 1, 1, 1)),
        (6, (2, 1, 1, 0, 1, 1)),
        (6, (2, 2, 2, 2, 2, 2)),
        (7, (2, 2, 2, 0, 2, 1, 1)),
    ]
    for n, w in cases:
        fast = enumerate_noncrossing(n, w)
        slow = brute_force_noncrossing(n, w)
        assert fast == slow, (n, w)
        assert all(g.multidegree() == w for g in fast)
        assert len(set(fast)) == len(fast)


def test_enumerate_noncrossing_counts():
    # Catalan numbers for perfect matchings
    for n, want in [(2, 1), (4, 2), (6, 5), (8, 14), (10, 42), (12, 132)]:
        assert len(enumerate_noncrossing(n, (1,) * n)) == want
    # Riordan numbers for 2-regular graphs: 1,0,1,1,3,6,15,36,91 from n=0
    riordan = {2: 1, 3: 1, 4: 3, 5: 6, 6: 15, 7: 36, 8: 91}
    for n, want in riordan.items():
        assert len(enumerate_noncrossing(n, (2,) * n)) == want, n


def test_enumerate_noncrossing_errors():
    with pytest.raises(LengthMismatch):
        enumerate_noncrossing(4, (1, 1, 1))
    with pytest.raises(OddDegreeSum):
        enumerate_noncrossing(4, (1, 1, 1, 0))
    assert enumerate_noncrossing(4, (0, 0, 0, 0)) == [Graph(4)]


def test_enumerate_matchings_double_factorial():
    for k, want in [(2, 1), (4, 3), (6, 15), (8, 105)]:
        assert len(enumerate_matchings(k)) == want
    sub = enumerate_matchings(6, vertices=[2, 3, 5, 6])
    assert len(sub) == 3
    assert all(m.n == 6 for m in sub)
    with pytest.raises(OddVertexCount):
        enumerate_matchings(3)


def test_noncrossing_matchings_sorted_lex():
    ms = noncrossing_matchings(6)
    assert len(ms) == 5
    assert ms == sorted(ms, key=lambda g: g.edges)
    assert ms[0].edges == ((1, 2), (3, 4), (5, 6))
    assert all(m.is_noncrossing() and m.is_matching() for m in ms)


def test_weight_vector_and_epsilon():
    w = WeightVector((2, 1, 1))
    assert w.n == 3 and w.total == 4 and w[0] == 2
    assert WeightVector.of(w) is w
    assert list(WeightVector.of([1, 1])) == [1, 1]
    with pytest.raises(ValueError):
        WeightVector((1, 0))
    with pytest.raises(ValueError):
        WeightVector(())
    assert epsilon((1, 1, 1, 1)) == 1
    assert epsilon((1, 1, 1)) == 2


def test_graph_json_round_trip():
    g = Graph(5, [(2, 1), (3, 5)])
    assert graph_from_json(graph_to_json(g)) == g
    assert graph_to_json(g) == {"n": 5, "edges": [[2, 1], [3, 5]]}
