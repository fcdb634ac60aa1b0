import random

import pytest

from graphinv.degree import (
    degree_trace,
    greedy_multigraph,
    is_boundary,
    moduli_degree,
)
from graphinv.errors import DegenerateModuli, EmptyModuli, OddTotalWeight
from graphinv.graphs import Graph

GOLDEN = [
    ((1, 1, 1, 1, 1, 1), 3),
    ((2, 2, 2, 2, 2), 5),
    ((1, 1, 1, 1, 1, 1, 1, 1), 40),
    ((1,) * 10, 1225),
    ((3, 3, 3, 3), 3),
    ((3, 2, 1), 1),
    ((2, 2, 1, 1), 1),
    ((1, 1, 1, 1), 1),
]


def test_golden_degrees():
    for w, d in GOLDEN:
        assert moduli_degree(w) == d, w


def test_balanced_quadruples():
    for d in range(1, 6):
        assert moduli_degree((d, d, d, d)) == d


def test_scaling_law():
    # degree of the d-fold weight is d^(n-3) times the original
    assert moduli_degree((2,) * 6) == 8 * 3
    assert moduli_degree((3,) * 6) == 27 * 3
    assert moduli_degree((2,) * 8) == 32 * 40


def test_input_canonicalization():
    assert moduli_degree([1, 2, 2, 1]) == 1
    assert moduli_degree((5, 1, 2, 2)) == moduli_degree((2, 5, 1, 2))


def test_errors():
    with pytest.raises(OddTotalWeight) as exc:
        moduli_degree((1, 1, 1))
    assert "double" in str(exc.value)
    with pytest.raises(EmptyModuli):
        moduli_degree((5, 1, 1, 1))
    with pytest.raises(DegenerateModuli):
        moduli_degree((1, 1))
    with pytest.raises(ValueError):
        moduli_degree(())  # not even a weight vector


def test_greedy_multigraph():
    assert greedy_multigraph((2, 2, 2)).edges == ((1, 2), (1, 3), (2, 3))
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(3, 7)
        w = tuple(rng.randint(1, 4) for _ in range(n))
        if sum(w) % 2 or 2 * max(w) > sum(w):
            continue
        g = greedy_multigraph(w)
        assert g.multidegree() == w
        assert all(t != h for t, h in g.edges)
        assert greedy_multigraph(w) == g
    with pytest.raises(ValueError):
        greedy_multigraph((3, 1))
    with pytest.raises(ValueError):
        greedy_multigraph((1, 1, 1))


def random_builder(seed):
    def build(w):
        rng = random.Random(f"{seed}:{w}")
        stubs = [v for v in range(1, len(w) + 1) for _ in range(w[v - 1])]
        for _ in range(500):
            rng.shuffle(stubs)
            pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
            if all(t != h for t, h in pairs):
                return Graph(len(w), pairs)
        raise RuntimeError(f"no loopless pairing found for {w}")

    return build


def test_degree_independent_of_multigraph_choice():
    rng = random.Random(99)
    vectors = []
    while len(vectors) < 20:
        n = rng.randint(4, 8)
        w = tuple(rng.randint(1, 4) for _ in range(n))
        if sum(w) % 2 == 0 and 2 * max(w) <= sum(w):
            vectors.append(w)
    for w in vectors:
        base = moduli_degree(w)
        for s in range(5):
            assert moduli_degree(w, graph_builder=random_builder(s)) == base, (w, s)


def test_memo_transparency():
    for w in [(1,) * 8, (2, 2, 2, 1, 1), (3, 2, 2, 2, 1)]:
        assert moduli_degree(w, use_memo=False) == moduli_degree(w)


def test_is_boundary():
    assert is_boundary((3, 1, 1, 1))
    assert is_boundary((2, 1, 1))
    assert not is_boundary((1, 1, 1, 1))
    assert not is_boundary((2, 2, 2, 2, 2))


def test_boundary_weights_still_run():
    assert moduli_degree((3, 1, 1, 1)) == 1
    assert moduli_degree((2, 1, 1)) == 1


def check_trace(node):
    action = node["action"]
    if action == "point":
        assert node["degree"] == 1
        assert len(node["weights"]) == 3
    elif action == "balanced-quadruple":
        assert node["degree"] == node["weights"][0]
        assert len(set(node["weights"])) == 1 and len(node["weights"]) == 4
    elif action == "pair-reduction":
        assert node["degree"] == node["child"]["degree"]
        check_trace(node["child"])
    elif action == "multigraph":
        total = 0
        for b in node["branches"]:
            if "child" in b:
                assert b["contribution"] == b["multiplicity"] * b["child"]["degree"]
                check_trace(b["child"])
            else:
                assert b["contribution"] == 0
                assert "note" in b
            total += b["contribution"]
        assert node["degree"] == total
        assert node["graph_edges"]
    elif action == "memoized":
        assert "degree" in node
    else:
        raise AssertionError(f"unknown action {action}")


def test_degree_trace():
    for w in [(1,) * 6, (1,) * 8, (3, 1, 1, 1), (2, 2, 2, 2, 2)]:
        value, trace = degree_trace(w)
        assert value == moduli_degree(w)
        assert trace["degree"] == value
        assert trace["weights"] == sorted(w, reverse=True)
        check_trace(trace)


def test_trace_shows_zero_contribution_note():
    # (2,2,1,1,1,1): the 2+2 edge sums to half the total if present; use a
    # vector guaranteed to have a half-total pair in the greedy graph
    value, trace = degree_trace((2, 2, 2, 1, 1))
    assert value == moduli_degree((2, 2, 2, 1, 1))
    notes = []

    def walk(node):
        for b in node.get("branches", []):
            if "note" in b:
                notes.append(b["note"])
            if "child" in b:
                walk(b["child"])
        if "child" in node:
            walk(node["child"])

    walk(trace)
    assert all("not a component" in s for s in notes)
