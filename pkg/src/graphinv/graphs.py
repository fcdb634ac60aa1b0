"""Directed loopless multigraphs on labeled vertices, and their combinatorics.

Vertices are labeled 1..n and pictured in that order around a circle.  A
graph is a multiset of directed edges (tail, head); reversing an edge flips
the sign of the associated invariant, so every graph has a canonical form
with all edges tail < head together with a flip-parity sign.  Non-crossing
graphs (no two chords cross) index the basis of each graded piece.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import (
    LengthMismatch,
    LoopEdge,
    OddDegreeSum,
    OddVertexCount,
    VertexCountMismatch,
)


class Graph:
    """Immutable directed loopless multigraph on vertices 1..n.

    Edge order is preserved as given.  Equality and hashing use the sorted
    edge multiset, so representations differing only in edge order compare
    equal; orientation still matters ({1->2} != {2->1}).
    """

    __slots__ = ("n", "edges", "_key", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        n = int(n)
        edges = tuple((int(t), int(h)) for t, h in edges)
        if n < 1:
            raise ValueError("vertex count must be positive")
        for t, h in edges:
            if t == h:
                raise LoopEdge(f"loop edge {t}->{h}")
            if not (1 <= t <= n and 1 <= h <= n):
                raise ValueError(f"edge {t}->{h} outside 1..{n}")
        self.n = n
        self.edges = edges
        self._key = (n, tuple(sorted(edges)))
        self._hash = hash(self._key)

    def multidegree(self) -> tuple[int, ...]:
        d = [0] * self.n
        for t, h in self.edges:
            d[t - 1] += 1
            d[h - 1] += 1
        return tuple(d)

    def regular_valence(self) -> int | None:
        """The common valence if the graph is regular, else None."""
        d = self.multidegree()
        return d[0] if len(set(d)) == 1 else None

    def is_matching(self) -> bool:
        return all(v == 1 for v in self.multidegree())

    def is_noncrossing(self) -> bool:
        return not crossing_pairs(self)

    def __eq__(self, other):
        return isinstance(other, Graph) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        inner = ", ".join(f"{t}->{h}" for t, h in self.edges)
        return f"Graph({self.n}; {inner})"


class Canonical(NamedTuple):
    graph: Graph
    sign: int


def multidegree(g: Graph) -> tuple[int, ...]:
    """Valence vector of g; additive under multiply."""
    return g.multidegree()


def canonicalize(g: Graph) -> Canonical:
    """Reorient every edge tail < head and sort; sign is (-1)^flips.

    evaluate(g, c) == sign * evaluate(graph, c) for every configuration c.
    """
    flips = 0
    out = []
    for t, h in g.edges:
        if t > h:
            t, h = h, t
            flips += 1
        out.append((t, h))
    out.sort()
    return Canonical(Graph(g.n, out), -1 if flips % 2 else 1)


def multiply(g: Graph, h: Graph) -> Graph:
    """Edge-multiset union; multidegrees add."""
    if g.n != h.n:
        raise VertexCountMismatch(f"cannot multiply graphs on {g.n} and {h.n} vertices")
    return Graph(g.n, g.edges + h.edges)


def edges_cross(e: tuple[int, int], f: tuple[int, int]) -> bool:
    """Chord-crossing test on the circle; shared endpoints never cross."""
    a, b = min(e), max(e)
    c, d = min(f), max(f)
    if len({a, b, c, d}) < 4:
        return False
    return a < c < b < d or c < a < d < b


def crossing_pairs(g: Graph) -> list[tuple[int, int]]:
    """Index pairs (i, j), i < j, of edges of g that cross, in lex order."""
    es = g.edges
    out = []
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if edges_cross(es[i], es[j]):
                out.append((i, j))
    return out


def enumerate_noncrossing(n: int, degree: Sequence[int]) -> list[Graph]:
    """All non-crossing canonical graphs on 1..n of the given multidegree.

    Sweep the circle once, keeping open arc endpoints on a stack.  At vertex
    v we close some number c of arcs (necessarily the most recently opened
    ones, or a crossing appears) and open the remaining valence as new arcs.
    The stack discipline makes every non-crossing graph appear exactly once.
    Output sorted lexicographically by edge list.
    """
    degree = tuple(int(x) for x in degree)
    if len(degree) != n:
        raise LengthMismatch(f"degree vector has length {len(degree)}, expected {n}")
    if any(x < 0 for x in degree):
        raise ValueError("valences must be nonnegative")
    if sum(degree) % 2:
        raise OddDegreeSum(f"multidegree total {sum(degree)} is odd")

    suffix = [0] * (n + 2)
    for v in range(n, 0, -1):
        suffix[v] = suffix[v + 1] + degree[v - 1]

    results: list[Graph] = []

    def place(v: int, stack: list[int], edges: list[tuple[int, int]]) -> None:
        if v > n:
            if not stack:
                results.append(Graph(n, sorted(edges)))
            return
        d = degree[v - 1]
        rest = suffix[v + 1]
        for close in range(min(d, len(stack)) + 1):
            open_after = len(stack) - close + (d - close)
            if open_after > rest or (rest - open_after) % 2:
                continue
            new_edges = edges + [(u, v) for u in stack[len(stack) - close:]]
            new_stack = stack[: len(stack) - close] + [v] * (d - close)
            place(v + 1, new_stack, new_edges)

    place(1, [], [])
    results.sort(key=lambda g: g.edges)
    return results


def enumerate_matchings(n: int, vertices: Iterable[int] | None = None) -> list[Graph]:
    """All perfect matchings of the given vertices (default 1..n), crossing
    or not, as canonical graphs on n vertices.  (k-1)!! of them for k vertices."""
    verts = sorted(vertices) if vertices is not None else list(range(1, n + 1))
    if len(verts) % 2:
        raise OddVertexCount(f"cannot match {len(verts)} vertices")
    out: list[Graph] = []

    def rec(avail: list[int], acc: list[tuple[int, int]]) -> None:
        if not avail:
            out.append(Graph(n, acc))
            return
        a = avail[0]
        for i in range(1, len(avail)):
            rec(avail[1:i] + avail[i + 1:], acc + [(a, avail[i])])

    rec(verts, [])
    return out


def noncrossing_matchings(n: int, vertices: Iterable[int] | None = None) -> list[Graph]:
    """The non-crossing perfect matchings of the given vertices, sorted
    lexicographically by edge list (monomial orders elsewhere rely on this)."""
    out = [m for m in enumerate_matchings(n, vertices) if not crossing_pairs(m)]
    out.sort(key=lambda g: g.edges)
    return out


class WeightVector:
    """Positive integer weights attached to the n labeled points."""

    __slots__ = ("w",)

    def __init__(self, w: Iterable[int]):
        w = tuple(int(x) for x in w)
        if not w:
            raise ValueError("weight vector may not be empty")
        if any(x < 1 for x in w):
            raise ValueError("weights must be positive integers")
        self.w = w

    @classmethod
    def of(cls, w) -> "WeightVector":
        return w if isinstance(w, cls) else cls(w)

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def total(self) -> int:
        return sum(self.w)

    def __iter__(self):
        return iter(self.w)

    def __len__(self):
        return len(self.w)

    def __getitem__(self, i):
        return self.w[i]

    def __eq__(self, other):
        return isinstance(other, WeightVector) and self.w == other.w

    def __hash__(self):
        return hash(self.w)

    def __repr__(self):
        return f"WeightVector{self.w}"


def epsilon(w) -> int:
    """Smallest degree step of the graded ring: 1 if total weight even, else 2."""
    return 1 if WeightVector.of(w).total % 2 == 0 else 2


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[t, h] for t, h in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    return Graph(int(obj["n"]), [(int(t), int(h)) for t, h in obj["edges"]])
