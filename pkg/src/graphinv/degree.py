"""Recursive computation of the projective degree of the weighted moduli
spaces of points on the line.

The recursion: a 3-point space is a single point (degree 1); while two
weights sum to more than half the total, subtract 1 from each (the pair
can never collide with anything, and the space is unchanged); a balanced
quadruple (d,d,d,d) is a degree-d rational normal curve; otherwise realize
the weights as the multidegree of any loopless multigraph and sum, over
its edges {j,k} with w_j + w_k < total/2, the edge multiplicity times the
degree after merging j and k into one vertex (edges whose weights sum to
exactly half the total contribute nothing).  The result is independent of
the multigraph chosen, which the test suite checks.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable

from .errors import DegenerateModuli, EmptyModuli, OddTotalWeight
from .graphs import Graph, WeightVector


def greedy_multigraph(w: tuple[int, ...]) -> Graph:
    """Loopless multigraph of multidegree w: repeatedly join the two
    vertices of largest remaining valence, ties to the smallest index.
    Succeeds whenever total is even and no entry exceeds half the total."""
    remaining = list(w)
    edges = []
    while True:
        order = sorted(range(len(remaining)), key=lambda i: (-remaining[i], i))
        a, b = order[0], order[1]
        if remaining[a] == 0:
            break
        if remaining[b] == 0:
            raise ValueError(f"multidegree {tuple(w)} is not realizable without loops")
        edges.append((min(a, b) + 1, max(a, b) + 1))
        remaining[a] -= 1
        remaining[b] -= 1
    return Graph(len(w), sorted(edges))


def _canon(w) -> tuple[int, ...]:
    return tuple(sorted(w, reverse=True))


def _validate(w: tuple[int, ...]) -> None:
    total = sum(w)
    if total % 2:
        raise OddTotalWeight(
            f"total weight {total} is odd; the smallest invariant degree is 2, so double the weights"
        )
    for x in w:
        if 2 * x > total:
            raise EmptyModuli(f"weight {x} exceeds half of total {total}; no semistable configurations")
    if len(w) < 3:
        raise DegenerateModuli(f"only {len(w)} weighted points remain")


def _degree(w: tuple[int, ...], builder: Callable, memo: dict | None, trace: dict | None) -> int:
    if trace is not None:
        trace["weights"] = list(w)
    if memo is not None and w in memo:
        if trace is not None:
            trace["action"] = "memoized"
            trace["degree"] = memo[w]
        return memo[w]
    _validate(w)
    total = sum(w)
    if len(w) == 3:
        result = 1
        if trace is not None:
            trace["action"] = "point"
    elif 2 * (w[0] + w[1]) > total:
        # the two largest weights can never coincide with anything else
        reduced = _canon(x for x in (w[0] - 1, w[1] - 1) + w[2:] if x > 0)
        child: dict | None = {} if trace is not None else None
        result = _degree(reduced, builder, memo, child)
        if trace is not None:
            trace["action"] = "pair-reduction"
            trace["pair"] = [w[0], w[1]]
            trace["child"] = child
    elif len(w) == 4 and len(set(w)) == 1:
        result = w[0]
        if trace is not None:
            trace["action"] = "balanced-quadruple"
    else:
        g = builder(w)
        if g.multidegree() != w:
            raise ValueError(f"graph builder returned multidegree {g.multidegree()}, wanted {w}")
        mult = Counter((min(t, h), max(t, h)) for t, h in g.edges)
        branches = []
        result = 0
        for (j, k), m in sorted(mult.items()):
            s = w[j - 1] + w[k - 1]
            branch = {"pair": [j, k], "multiplicity": m, "weight_sum": s}
            if 2 * s < total:
                merged = _canon(tuple(x for i, x in enumerate(w) if i not in (j - 1, k - 1)) + (s,))
                child = {} if trace is not None else None
                sub = _degree(merged, builder, memo, child)
                result += m * sub
                branch["contribution"] = m * sub
                if trace is not None:
                    branch["child"] = child
            else:
                branch["contribution"] = 0
                branch["note"] = "pair weight equals half the total; not a component"
            branches.append(branch)
        if trace is not None:
            trace["action"] = "multigraph"
            trace["graph_edges"] = [[t, h] for t, h in g.edges]
            trace["branches"] = branches
    if memo is not None:
        memo[w] = result
    if trace is not None:
        trace["degree"] = result
    return result


def moduli_degree(w, graph_builder: Callable | None = None, use_memo: bool = True) -> int:
    """Degree of the moduli space of w-weighted points on the line, under
    its natural projective embedding.  graph_builder may replace the greedy
    multigraph choice (the result must not change); use_memo=False disables
    the per-call memo table for transparency checks."""
    builder = graph_builder or greedy_multigraph
    memo = {} if use_memo else None
    return _degree(_canon(WeightVector.of(w).w), builder, memo, None)


def degree_trace(w, graph_builder: Callable | None = None) -> tuple[int, dict]:
    """moduli_degree plus the recursion tree, for display.  Weight vectors
    in the trace are sorted descending, as the recursion canonicalizes."""
    builder = graph_builder or greedy_multigraph
    trace: dict = {}
    value = _degree(_canon(WeightVector.of(w).w), builder, {}, trace)
    return value, trace


def is_boundary(w) -> bool:
    """True when stable configurations do not exist but semistable ones do:
    every semistable configuration is strictly semistable, and the degree
    the recursion reports is flagged rather than interpreted."""
    w = WeightVector.of(w)
    return 2 * max(w.w) == w.total
