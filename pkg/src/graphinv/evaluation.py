"""Exact evaluation of graph invariants at rational point configurations.

A point of the projective line is a pair (u, v) of rationals, not both
zero.  A graph evaluates to the product over its edges of
u_head*v_tail - u_tail*v_head, and a combination evaluates linearly.
Everything here is exact; this module is the oracle the rest of the
library is tested against.
"""

from __future__ import annotations

import random
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import LengthMismatch, NoStableConfiguration
from .graphs import Graph, WeightVector

INFINITY_TOKENS = ("inf", "infinity", "oo")


class Stability(Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictlySemistable"
    UNSTABLE = "unstable"


class Configuration:
    """n points on the projective line in homogeneous rational coordinates."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[tuple]):
        pts = []
        for u, v in points:
            u, v = Fraction(u), Fraction(v)
            if u == 0 and v == 0:
                raise ValueError("(0, 0) is not a projective point")
            pts.append((u, v))
        self.points = tuple(pts)

    @classmethod
    def from_affine(cls, values: Iterable) -> "Configuration":
        """Build from affine values; None or 'inf' marks the point at infinity."""
        pts = []
        for x in values:
            if x is None or (isinstance(x, str) and x.strip().lower() in INFINITY_TOKENS):
                pts.append((Fraction(1), Fraction(0)))
            else:
                pts.append((Fraction(x), Fraction(1)))
        return cls(pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def coincide(self, i: int, j: int) -> bool:
        """True iff points i and j (1-based) are projectively equal."""
        ui, vi = self.points[i - 1]
        uj, vj = self.points[j - 1]
        return ui * vj - uj * vi == 0

    def __eq__(self, other):
        return isinstance(other, Configuration) and self.points == other.points

    def __repr__(self):
        inner = ", ".join(f"[{u}:{v}]" for u, v in self.points)
        return f"Configuration({inner})"


def evaluate(g: Graph, c: Configuration) -> Fraction:
    """Product over edges of u_head*v_tail - u_tail*v_head, exact."""
    pts = c.points
    if g.n != len(pts):
        raise LengthMismatch(f"graph on {g.n} vertices, configuration of {len(pts)} points")
    out = Fraction(1)
    for t, h in g.edges:
        ut, vt = pts[t - 1]
        uh, vh = pts[h - 1]
        out *= uh * vt - ut * vh
        if not out:
            break
    return out


def evaluate_combination(comb, c: Configuration) -> Fraction:
    """Sum of coeff * evaluate(graph, c) over the combination's terms."""
    if comb.n != c.n:
        raise LengthMismatch(f"combination on {comb.n} vertices, configuration of {c.n} points")
    return sum((coeff * evaluate(g, c) for g, coeff in comb.terms.items()), Fraction(0))


def stability(c: Configuration, w) -> Stability:
    """Classify by the largest total weight carried by coinciding points."""
    w = WeightVector.of(w)
    if w.n != c.n:
        raise LengthMismatch(f"{w.n} weights for {c.n} points")
    reps: list[int] = []
    class_weight: list[int] = []
    for i in range(1, c.n + 1):
        for k, r in enumerate(reps):
            if c.coincide(i, r):
                class_weight[k] += w[i - 1]
                break
        else:
            reps.append(i)
            class_weight.append(w[i - 1])
    m = max(class_weight)
    if 2 * m < w.total:
        return Stability.STABLE
    if 2 * m == w.total:
        return Stability.STRICTLY_SEMISTABLE
    return Stability.UNSTABLE


def random_stable_configuration(w, seed: int) -> Configuration:
    """Distinct random integer points, deterministic per seed.

    Affine numerators are drawn from [-10^4, 10^4] with denominator 1 and
    re-drawn on collision, so the result is stable whenever stability is
    achievable at all (every w_i < total/2).
    """
    w = WeightVector.of(w)
    if 2 * max(w.w) >= w.total:
        raise NoStableConfiguration(
            f"weight {max(w.w)} is at least half of total {w.total}; no stable configuration exists"
        )
    rng = random.Random(seed)
    seen: set[int] = set()
    pts = []
    while len(pts) < w.n:
        x = rng.randint(-10000, 10000)
        if x in seen:
            continue
        seen.add(x)
        pts.append((Fraction(x), Fraction(1)))
    return Configuration(pts)


def configuration_to_json(c: Configuration) -> dict:
    return {"points": [[str(u), str(v)] for u, v in c.points]}


def configuration_from_json(obj: dict) -> Configuration:
    """Accepts {"points": [["u","v"], ...]} or the affine shorthand
    {"affine": [x, ..., "inf", ...]}."""
    if "points" in obj:
        return Configuration([(Fraction(u), Fraction(v)) for u, v in obj["points"]])
    if "affine" in obj:
        return Configuration.from_affine(obj["affine"])
    raise ValueError("configuration JSON needs a 'points' or 'affine' key")
