"""Formal combinations of graphs, Plucker exchange, and straightening.

Every invariant of fixed multidegree is a rational combination of
non-crossing graphs.  The straightening algorithm rewrites an arbitrary
combination onto that basis by repeatedly exchanging a crossing pair of
edges through the three-term Plucker identity.  With canonical (tail <
head) orientations on four distinct vertices i < j < k < l the identity
reads

    X_{ik.jl} = X_{ij.kl} + X_{il.jk}

on top of any residual graph; the sign conventions are pinned by the
evaluation oracle in the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    DegreeMismatch,
    NonContiguousClump,
    SharedEndpoint,
    VertexCountMismatch,
)
from .graphs import Graph, canonicalize, crossing_pairs


class GraphCombination:
    """Rational-linear combination of canonical graphs of one multidegree.

    Keys are canonicalized on construction (folding flip signs into the
    coefficients), zero coefficients are dropped, and terms iterate in
    lexicographic edge order.  The zero combination keeps whatever degree
    it was built with, or None when nothing pinned one down.
    """

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, terms: Mapping[Graph, object] | None = None, degree=None):
        acc: dict[Graph, Fraction] = {}
        deg = tuple(degree) if degree is not None else None
        for g, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            if g.n != n:
                raise VertexCountMismatch(f"graph on {g.n} vertices in a combination on {n}")
            cg, sign = canonicalize(g)
            d = cg.multidegree()
            if deg is None:
                deg = d
            elif d != deg:
                raise DegreeMismatch(f"mixed multidegrees {deg} and {d}")
            acc[cg] = acc.get(cg, Fraction(0)) + sign * coeff
        self.n = n
        self.degree = deg
        self.terms = {g: c for g, c in sorted(acc.items(), key=lambda kv: kv[0].edges) if c}

    @classmethod
    def from_graph(cls, g: Graph, coeff=1) -> "GraphCombination":
        return cls(g.n, {g: Fraction(coeff)})

    @classmethod
    def zero(cls, n: int, degree=None) -> "GraphCombination":
        return cls(n, {}, degree=degree)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GraphCombination") -> "GraphCombination":
        if self.n != other.n:
            raise VertexCountMismatch(f"{self.n} != {other.n}")
        if self.degree is not None and other.degree is not None and self.degree != other.degree:
            raise DegreeMismatch(f"{self.degree} != {other.degree}")
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms.get(g, Fraction(0)) + c
        return GraphCombination(self.n, terms, degree=self.degree or other.degree)

    def __sub__(self, other: "GraphCombination") -> "GraphCombination":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "GraphCombination":
        scalar = Fraction(scalar)
        return GraphCombination(
            self.n, {g: scalar * c for g, c in self.terms.items()}, degree=self.degree
        )

    def __neg__(self) -> "GraphCombination":
        return (-1) * self

    def __eq__(self, other):
        return (
            isinstance(other, GraphCombination)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        if self.is_zero:
            return f"GraphCombination({self.n}; 0)"
        inner = " + ".join(f"({c})*{g!r}" for g, c in self.terms.items())
        return f"GraphCombination({self.n}; {inner})"


def plucker_exchange(g: Graph, e1: int, e2: int) -> GraphCombination:
    """Rewrite X_g through the three-term identity on edges e1, e2 of g.

    The two edges must have four distinct endpoints i < j < k < l.  The
    crossing pairing {ik, jl} becomes {ij, kl} + {il, jk}; each of the two
    non-crossing pairings becomes the difference of the other two.  All
    other edges pass through untouched, and orientation flips are folded
    into the coefficients.
    """
    edges = list(g.edges)
    a, b = edges[e1], edges[e2]
    if len({a[0], a[1], b[0], b[1]}) < 4:
        raise SharedEndpoint(f"edges {a} and {b} share a vertex")
    sign = 1
    for t, h in (a, b):
        if t > h:
            sign = -sign
    i, j, k, l = sorted((a[0], a[1], b[0], b[1]))
    split_ij = ((i, j), (k, l))
    split_ik = ((i, k), (j, l))
    split_il = ((i, l), (j, k))
    rewrites = {
        frozenset(split_ik): ((split_ij, 1), (split_il, 1)),
        frozenset(split_ij): ((split_ik, 1), (split_il, -1)),
        frozenset(split_il): ((split_ik, 1), (split_ij, -1)),
    }
    pair = frozenset(((min(a), max(a)), (min(b), max(b))))
    rest = [edges[x] for x in range(len(edges)) if x != e1 and x != e2]
    terms: dict[Graph, Fraction] = {}
    for split, coeff in rewrites[pair]:
        h = Graph(g.n, rest + list(split))
        terms[h] = terms.get(h, Fraction(0)) + sign * coeff
    return GraphCombination(g.n, terms, degree=g.multidegree())


def _chord_length(g: Graph) -> float:
    """Total Euclidean chord length with vertices on the unit circle.

    Strictly decreases when a crossing pair is exchanged; used only as a
    debug-mode termination assertion, never for correctness.
    """
    n = g.n
    total = 0.0
    for t, h in g.edges:
        arc = min(abs(t - h), n - abs(t - h))
        total += math.sin(math.pi * arc / n)
    return total


_STRAIGHTEN_MEMO: dict[Graph, dict[Graph, Fraction]] = {}


def _straighten_canonical(g: Graph) -> dict[Graph, Fraction]:
    """Non-crossing expansion of a single canonical graph, memoized.

    The pivot is the lexicographically smallest crossing pair of edge
    indices, so results are deterministic; the cache only ever stores
    fully straightened values, so concurrent readers see consistent data.
    """
    hit = _STRAIGHTEN_MEMO.get(g)
    if hit is not None:
        return hit
    cross = crossing_pairs(g)
    if not cross:
        out = {g: Fraction(1)}
    else:
        e1, e2 = cross[0]
        repl = plucker_exchange(g, e1, e2)
        if __debug__:
            before = _chord_length(g)
            for h in repl.terms:
                assert _chord_length(h) < before - 1e-9
        out = {}
        for h, c in repl.terms.items():
            for k, c2 in _straighten_canonical(h).items():
                out[k] = out.get(k, Fraction(0)) + c * c2
        out = {k: v for k, v in sorted(out.items(), key=lambda kv: kv[0].edges) if v}
    _STRAIGHTEN_MEMO[g] = out
    return out


def straighten_graph(g: Graph) -> GraphCombination:
    """Straighten a single graph (any orientations) onto the basis."""
    cg, sign = canonicalize(g)
    flat = _straighten_canonical(cg)
    return GraphCombination(
        g.n, {h: sign * c for h, c in flat.items()}, degree=cg.multidegree()
    )


def straighten(c: GraphCombination) -> GraphCombination:
    """Rewrite c on the non-crossing basis; exact, linear, idempotent."""
    out: dict[Graph, Fraction] = {}
    for g, coeff in c.terms.items():
        for k, c2 in _straighten_canonical(g).items():
            out[k] = out.get(k, Fraction(0)) + coeff * c2
    return GraphCombination(c.n, out, degree=c.degree)


def adjacent_clumps(sizes: Iterable[int]) -> list[list[int]]:
    """Intervals of the given sizes covering 1..sum(sizes) in order."""
    out = []
    start = 1
    for s in sizes:
        s = int(s)
        if s < 1:
            raise ValueError("clump sizes must be positive")
        out.append(list(range(start, start + s)))
        start += s
    return out


def clump_map(c: GraphCombination, clumps: Iterable[Iterable[int]]) -> GraphCombination:
    """Identify each clump of consecutive vertices to a single vertex.

    clumps lists the intervals in order, e.g. [[1, 2], [3], [4]].  Edges map
    endpoint-wise; a graph whose image acquires a loop contributes zero.
    """
    clumps = [list(cl) for cl in clumps]
    flat = [v for cl in clumps for v in cl]
    if flat != list(range(1, c.n + 1)):
        raise NonContiguousClump(f"clumps must be consecutive intervals covering 1..{c.n} in order")
    vmap = {}
    for idx, cl in enumerate(clumps, start=1):
        for v in cl:
            vmap[v] = idx
    k = len(clumps)
    out: dict[Graph, Fraction] = {}
    for g, coeff in c.terms.items():
        new = [(vmap[t], vmap[h]) for t, h in g.edges]
        if any(t == h for t, h in new):
            continue
        img = Graph(k, new)
        out[img] = out.get(img, Fraction(0)) + coeff
    deg = None
    if c.degree is not None:
        deg = tuple(sum(c.degree[v - 1] for v in cl) for cl in clumps)
    return GraphCombination(k, out, degree=deg)


def combination_to_json(c: GraphCombination) -> dict:
    return {
        "n": c.n,
        "degree": list(c.degree) if c.degree is not None else None,
        "terms": [
            {"coeff": str(coeff), "edges": [[t, h] for t, h in g.edges]}
            for g, coeff in c.terms.items()
        ],
    }


def combination_from_json(obj: dict) -> GraphCombination:
    n = int(obj["n"])
    terms: dict[Graph, Fraction] = {}
    for entry in obj["terms"]:
        g = Graph(n, [(int(t), int(h)) for t, h in entry["edges"]])
        terms[g] = terms.get(g, Fraction(0)) + Fraction(entry["coeff"])
    degree = obj.get("degree")
    return GraphCombination(n, terms, degree=tuple(degree) if degree else None)
