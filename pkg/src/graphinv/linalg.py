"""Exact rational linear algebra: rank, kernel bases, span membership.

Dense Fraction matrices at the API; internally a sparse column-echelon
that optionally tracks how each reduced row was formed from the original
columns, so span membership can hand back certificate coefficients.  No
floating point anywhere.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

_ZERO = Fraction(0)


class RationalMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        self.entries = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], height: int | None = None) -> "RationalMatrix":
        columns = [tuple(c) for c in columns]
        if not columns:
            return cls([() for _ in range(height or 0)])
        h = len(columns[0])
        if any(len(c) != h for c in columns):
            raise DimensionMismatch("ragged columns")
        return cls([[c[i] for c in columns] for i in range(h)])

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([self.column(j) for j in range(self.cols)])

    def matvec(self, x: Sequence) -> tuple[Fraction, ...]:
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} against {self.cols} columns")
        x = [Fraction(v) for v in x]
        live = [j for j, v in enumerate(x) if v]
        return tuple(sum((r[j] * x[j] for j in live), _ZERO) for r in self.entries)

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"


class _Echelon:
    """Sparse echelon rows keyed by pivot index; optional provenance.

    Stored rows have their pivot normalized to 1 and pivot = min key, so a
    vector reduces by walking its support in increasing order; each
    elimination only introduces larger indices.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, tuple[dict[int, Fraction], dict[int, Fraction] | None]] = {}

    def reduce(self, vec: dict[int, Fraction], expr: dict[int, Fraction] | None) -> int | None:
        """Eliminate vec (in place) against stored rows; returns the leading
        surviving index, or None when vec reduces to zero.  expr, when
        given, is updated so that vec_original + sum(expr[j] * column_j)
        stays constant for query vectors (see in_span)."""
        heap = sorted(vec)
        while heap:
            p = heapq.heappop(heap)
            c = vec.get(p)
            if not c:
                vec.pop(p, None)
                continue
            hit = self.rows.get(p)
            if hit is None:
                return p
            rvec, rexpr = hit
            del vec[p]
            for col, val in rvec.items():
                if col == p:
                    continue
                cur = vec.get(col)
                if cur is None:
                    vec[col] = -c * val
                    heapq.heappush(heap, col)
                else:
                    cur = cur - c * val
                    if cur:
                        vec[col] = cur
                    else:
                        del vec[col]
            if expr is not None and rexpr:
                for col, val in rexpr.items():
                    cur = expr.get(col, _ZERO) - c * val
                    if cur:
                        expr[col] = cur
                    else:
                        expr.pop(col, None)
        return None

    def insert(self, vec: dict[int, Fraction], expr: dict[int, Fraction] | None) -> int | None:
        """Reduce vec and store it when independent; returns its pivot or None."""
        p = self.reduce(vec, expr)
        if p is None:
            return None
        c = vec[p]
        vec = {k: v / c for k, v in vec.items()}
        if expr is not None:
            expr = {k: v / c for k, v in expr.items()}
        self.rows[p] = (vec, expr)
        return p


def _sparse_column(m: RationalMatrix, j: int) -> dict[int, Fraction]:
    return {i: m.entries[i][j] for i in range(m.rows) if m.entries[i][j]}


def rank(m: RationalMatrix) -> int:
    """Exact rank (column insertion count)."""
    ech = _Echelon()
    count = 0
    for j in range(m.cols):
        if ech.insert(_sparse_column(m, j), None) is not None:
            count += 1
    return count


def _primitive(x: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale to coprime integers with the first nonzero entry positive."""
    denom = 1
    for v in x:
        if v:
            denom = denom * v.denominator // math.gcd(denom, v.denominator)
    ints = [int(v * denom) for v in x]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-u for u in ints]
            break
    return tuple(Fraction(v) for v in ints)


def kernel_basis(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Primitive-integer basis of the right kernel, one vector per
    dependent column, in column order; length = cols - rank."""
    ech = _Echelon()
    out = []
    for j in range(m.cols):
        expr = {j: Fraction(1)}
        if ech.insert(_sparse_column(m, j), expr) is None:
            x = [_ZERO] * m.cols
            for col, val in expr.items():
                x[col] = val
            out.append(_primitive(x))
    return out


def in_span(v: Sequence, m: RationalMatrix) -> tuple[Fraction, ...] | None:
    """Certificate x with m @ x = v, or None when v is outside the column
    span.  The certificate is re-verified exactly before returning."""
    v = [Fraction(x) for x in v]
    if len(v) != m.rows:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.rows} rows")
    ech = _Echelon()
    for j in range(m.cols):
        ech.insert(_sparse_column(m, j), {j: Fraction(1)})
    qvec = {i: x for i, x in enumerate(v) if x}
    qexpr: dict[int, Fraction] = {}
    if ech.reduce(qvec, qexpr) is not None:
        return None
    x = [_ZERO] * m.cols
    for col, val in qexpr.items():
        x[col] = -val
    if m.matvec(x) != tuple(v):
        raise AssertionError("span certificate failed re-verification")
    return tuple(x)
