"""Relation families of the invariant ring, normal forms, and exact
ideal-membership certificates.

Polynomials here live in the ring whose variables are perfect matchings
of 1..n.  Linear relations (sign flips and three-term exchanges) let every
variable be rewritten in the non-crossing matchings, and products of
non-crossing variables are compared through the non-crossing basis of the
regular multidegrees, which decides whether a polynomial is a relation.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BadExponent,
    DegreeMismatch,
    NotAMatching,
    OddVertexCount,
    VertexCountMismatch,
    VertexCountTooSmall,
)
from .evaluation import Configuration, evaluate
from .graphs import (
    Graph,
    canonicalize,
    enumerate_matchings,
    enumerate_noncrossing,
    graph_from_json,
    graph_to_json,
    multiply,
    noncrossing_matchings,
)
from .linalg import RationalMatrix, in_span, kernel_basis
from .straightening import GraphCombination, straighten_graph


def _factor_key(g: Graph):
    return g.edges


def _monomial_key(mono: tuple[Graph, ...]):
    return tuple(g.edges for g in mono)


class GraphPolynomial:
    """Polynomial in perfect-matching variables.

    terms maps a monomial, stored as a sorted tuple of canonical matchings,
    to a nonzero rational coefficient; all monomials share one length (the
    degree).  Orientation flips fold into the coefficients on construction.
    """

    __slots__ = ("n", "terms", "degree")

    def __init__(self, n: int, terms=None, degree: int | None = None):
        acc: dict[tuple[Graph, ...], Fraction] = {}
        deg = degree
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            sign = 1
            canon = []
            for f in mono:
                if f.n != n:
                    raise VertexCountMismatch(f"factor on {f.n} vertices in a polynomial on {n}")
                cf, s = canonicalize(f)
                if not cf.is_matching():
                    raise NotAMatching(f"{f!r} is not a perfect matching")
                sign *= s
                canon.append(cf)
            key = tuple(sorted(canon, key=_factor_key))
            if deg is None:
                deg = len(key)
            elif len(key) != deg:
                raise DegreeMismatch(f"monomial of length {len(key)} in a degree-{deg} polynomial")
            acc[key] = acc.get(key, Fraction(0)) + sign * coeff
        self.n = n
        self.degree = deg
        self.terms = {k: v for k, v in sorted(acc.items(), key=lambda kv: _monomial_key(kv[0])) if v}

    @classmethod
    def zero(cls, n: int, degree: int | None = None) -> "GraphPolynomial":
        return cls(n, {}, degree=degree)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GraphPolynomial") -> "GraphPolynomial":
        if self.n != other.n:
            raise VertexCountMismatch(f"{self.n} != {other.n}")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return GraphPolynomial(self.n, terms, degree=self.degree if self.degree is not None else other.degree)

    def __sub__(self, other: "GraphPolynomial") -> "GraphPolynomial":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "GraphPolynomial":
        scalar = Fraction(scalar)
        return GraphPolynomial(self.n, {k: scalar * v for k, v in self.terms.items()}, degree=self.degree)

    def __eq__(self, other):
        return (
            isinstance(other, GraphPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        if self.is_zero:
            return f"GraphPolynomial({self.n}; 0)"
        return f"GraphPolynomial({self.n}; {len(self.terms)} terms, degree {self.degree})"


def evaluate_polynomial(p: GraphPolynomial, c: Configuration) -> Fraction:
    """Sum over terms of coeff times the product of factor evaluations."""
    total = Fraction(0)
    for mono, coeff in p.terms.items():
        prod = coeff
        for f in mono:
            prod *= evaluate(f, c)
            if not prod:
                break
        total += prod
    return total


def plucker_linear_relations(n: int) -> list[GraphCombination]:
    """Three-term exchange relations among matchings: for each four vertices
    i<j<k<l and each matching of the rest, {ij,kl} - {ik,jl} + {il,jk}."""
    if n % 2:
        raise OddVertexCount(f"{n} vertices admit no perfect matchings")
    if n < 4:
        raise VertexCountTooSmall("need at least 4 vertices")
    out = []
    for quad in itertools.combinations(range(1, n + 1), 4):
        i, j, k, l = quad
        rest = [v for v in range(1, n + 1) if v not in quad]
        for gamma in enumerate_matchings(n, rest):
            base = list(gamma.edges)
            terms = {
                Graph(n, base + [(i, j), (k, l)]): Fraction(1),
                Graph(n, base + [(i, k), (j, l)]): Fraction(-1),
                Graph(n, base + [(i, l), (j, k)]): Fraction(1),
            }
            out.append(GraphCombination(n, terms, degree=(1,) * n))
    return out


def simple_binomial_relations(n: int) -> list[GraphPolynomial]:
    """Quadric binomials X_{G1.D1} X_{G2.D2} - X_{G1.D2} X_{G2.D1}.

    The D's are the two non-crossing matchings of a 4-subset and the G's the
    first two non-crossing matchings of its complement.  Both monomials have
    the same underlying edge multiset, so each binomial vanishes identically.
    For n=8 the 4-subset and its complement play symmetric roles, so only
    subsets containing vertex 1 are used (35 of them); n=6 has none.
    """
    if n % 2:
        raise OddVertexCount(f"{n} vertices admit no perfect matchings")
    if n < 6:
        raise VertexCountTooSmall("need at least 6 vertices")
    if n == 6:
        return []
    if n == 8:
        quads = [q for q in itertools.combinations(range(1, 9), 4) if 1 in q]
    else:
        quads = list(itertools.combinations(range(1, n + 1), 4))
    out = []
    for quad in quads:
        i, j, k, l = quad
        d1 = Graph(n, [(i, j), (k, l)])
        d2 = Graph(n, [(i, l), (j, k)])
        rest = [v for v in range(1, n + 1) if v not in quad]
        g1, g2 = noncrossing_matchings(n, rest)[:2]
        terms = {
            (multiply(g1, d1), multiply(g2, d2)): Fraction(1),
            (multiply(g1, d2), multiply(g2, d1)): Fraction(-1),
        }
        out.append(GraphPolynomial(n, terms, degree=2))
    return out


def noncrossing_monomials(n: int, k: int) -> list[tuple[Graph, ...]]:
    """Degree-k monomials in the non-crossing matching variables, in
    combinations-with-replacement order over the lex-ordered variables."""
    return list(itertools.combinations_with_replacement(noncrossing_matchings(n), k))


def noncrossing_monomial_matrix(n: int, k: int) -> RationalMatrix:
    """Matrix of the multiplication map: column t is the normal form of the
    t-th degree-k monomial's product graph, in the non-crossing
    multidegree-(k,...,k) basis."""
    monos = noncrossing_monomials(n, k)
    basis = enumerate_noncrossing(n, (k,) * n)
    index = {g: i for i, g in enumerate(basis)}
    columns = []
    for mono in monos:
        v = [Fraction(0)] * len(basis)
        prod = Graph(n, [e for f in mono for e in f.edges])
        for g, c in straighten_graph(prod).terms.items():
            v[index[g]] = c
        columns.append(v)
    return RationalMatrix.from_columns(columns, height=len(basis))


def quadric_relation_space(n: int) -> list[tuple[Fraction, ...]]:
    """Kernel basis of the degree-2 monomial multiplication map, i.e. the
    quadric relations in non-crossing matching variables, as primitive
    integer coordinate vectors over noncrossing_monomials(n, 2)."""
    if n % 2:
        raise OddVertexCount(f"{n} vertices admit no perfect matchings")
    if n < 4:
        raise VertexCountTooSmall("need at least 4 vertices")
    return kernel_basis(noncrossing_monomial_matrix(n, 2))


_SEGRE6_CACHE: GraphPolynomial | None = None


def _segre6() -> GraphPolynomial:
    global _SEGRE6_CACHE
    if _SEGRE6_CACHE is None:
        monos = noncrossing_monomials(6, 3)
        ker = kernel_basis(noncrossing_monomial_matrix(6, 3))
        assert len(ker) == 1, "the cubic relation space for n=6 must be one-dimensional"
        vec = ker[0]
        poly = GraphPolynomial(
            6, {monos[t]: vec[t] for t in range(len(monos)) if vec[t]}, degree=3
        )
        if next(iter(poly.terms.values())) < 0:
            poly = (-1) * poly
        _SEGRE6_CACHE = poly
    return _SEGRE6_CACHE


def segre_cubic(n: int) -> GraphPolynomial:
    """The cubic relation among matching variables.

    For n=6 it is the unique cubic relation (kernel generator of the
    degree-3 multiplication map, primitive integer coefficients, positive
    leading term in lexicographic monomial order).  For larger even n every
    factor is extended by the horizontal edges (7,8), (9,10), ..., which
    multiplies every evaluation by the same nonzero factor, so the result
    is again a relation."""
    if n % 2:
        raise OddVertexCount(f"{n} vertices admit no perfect matchings")
    if n < 6:
        raise VertexCountTooSmall("need at least 6 vertices")
    base = _segre6()
    if n == 6:
        return base
    extra = [(v, v + 1) for v in range(7, n, 2)]
    terms = {
        tuple(Graph(n, list(f.edges) + extra) for f in mono): coeff
        for mono, coeff in base.terms.items()
    }
    return GraphPolynomial(n, terms, degree=3)


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = perm[v] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def odd_power_relation(n: int, g: Graph, i: int) -> GraphPolynomial:
    """Alternating sum over all vertex permutations of the i-th power of one
    matching variable; a relation for odd i with 1 < i < n-1.  Terms with
    the same canonical image merge, so the output is far smaller than n!."""
    if n % 2:
        raise OddVertexCount(f"{n} vertices admit no perfect matchings")
    cg, _ = canonicalize(g)
    if cg.n != n or not cg.is_matching():
        raise NotAMatching(f"{g!r} is not a perfect matching on {n} vertices")
    if i % 2 == 0 or not (1 < i < n - 1):
        raise BadExponent(f"exponent must be odd with 1 < i < {n - 1}, got {i}")
    acc: dict[tuple[Graph, ...], int] = {}
    for perm in itertools.permutations(range(1, n + 1)):
        img = Graph(n, [(perm[t - 1], perm[h - 1]) for t, h in cg.edges])
        ci, s = canonicalize(img)
        key = (ci,) * i
        # s**i == s for odd i
        acc[key] = acc.get(key, 0) + _perm_sign(perm) * s
    return GraphPolynomial(n, {k: Fraction(v) for k, v in acc.items() if v}, degree=i)


def expand_variable(m: Graph) -> GraphCombination:
    """One matching variable rewritten on the non-crossing matchings."""
    cm, _ = canonicalize(m)
    if not cm.is_matching():
        raise NotAMatching(f"{m!r} is not a perfect matching")
    return straighten_graph(m)


def reduce_to_noncrossing_vars(p: GraphPolynomial) -> GraphPolynomial:
    """Substitute the non-crossing expansion for every matching variable and
    expand; the image of p in the polynomial ring on non-crossing matching
    variables (the quotient by sign and exchange linear relations)."""
    out: dict[tuple[Graph, ...], Fraction] = {}
    for mono, coeff in p.terms.items():
        expansions = [list(expand_variable(f).terms.items()) for f in mono]
        for combo in itertools.product(*expansions):
            key = tuple(sorted((g for g, _ in combo), key=_factor_key))
            c = coeff
            for _, c2 in combo:
                c = c * c2
            out[key] = out.get(key, Fraction(0)) + c
    return GraphPolynomial(p.n, out, degree=p.degree)


def ring_normal_form(p: GraphPolynomial) -> GraphCombination:
    """Multiply out each monomial into one graph, straighten, and sum.

    p vanishes on every configuration iff the result is the zero
    combination, by linear independence of the non-crossing basis."""
    acc: dict[Graph, Fraction] = {}
    for mono, coeff in p.terms.items():
        prod = Graph(p.n, [e for f in mono for e in f.edges])
        for g, c in straighten_graph(prod).terms.items():
            acc[g] = acc.get(g, Fraction(0)) + coeff * c
    deg = (p.degree,) * p.n if p.degree is not None else None
    return GraphCombination(p.n, acc, degree=deg)


def _attach_monomial(mono: tuple[Graph, ...], cof: tuple[Graph, ...]) -> tuple[Graph, ...]:
    return tuple(sorted(mono + cof, key=_factor_key))


def ideal_membership(
    candidate: GraphPolynomial,
    generators: Sequence[GraphPolynomial],
    k: int,
) -> tuple[bool, list[tuple[int, tuple[Graph, ...], Fraction]] | None]:
    """Decide degree-k membership in the homogeneous ideal of the generators.

    Everything is first pushed into the polynomial ring on non-crossing
    matching variables; the degree-k slice of the ideal there is spanned by
    cofactor-monomial times reduced-generator products.  Returns (member,
    certificate); the certificate lists (generator index, cofactor monomial,
    coefficient) triples with
        candidate = sum coeff * cofactor * generator
    as reduced polynomials, re-verified exactly before returning."""
    if candidate.degree is not None and candidate.degree != k:
        raise DegreeMismatch(f"candidate has degree {candidate.degree}, expected {k}")
    n = candidate.n
    monos_k = noncrossing_monomials(n, k)
    index = {m: t for t, m in enumerate(monos_k)}

    def vec_of(poly: GraphPolynomial) -> list[Fraction]:
        v = [Fraction(0)] * len(monos_k)
        for mono, c in poly.terms.items():
            v[index[mono]] = c
        return v

    reduced = [reduce_to_noncrossing_vars(g) for g in generators]
    columns: list[list[Fraction]] = []
    provenance: list[tuple[int, tuple[Graph, ...]]] = []
    for gi, red in enumerate(reduced):
        if red.is_zero:
            continue
        if red.degree > k:
            raise DegreeMismatch(f"generator {gi} has degree {red.degree} > {k}")
        for cof in noncrossing_monomials(n, k - red.degree):
            v = [Fraction(0)] * len(monos_k)
            for mono, c in red.terms.items():
                v[index[_attach_monomial(mono, cof)]] += c
            columns.append(v)
            provenance.append((gi, cof))

    red_cand = reduce_to_noncrossing_vars(candidate)
    target = vec_of(red_cand)
    if not columns:
        return (True, []) if not any(target) else (False, None)
    x = in_span(target, RationalMatrix.from_columns(columns, height=len(monos_k)))
    if x is None:
        return (False, None)
    cert = [(provenance[t][0], provenance[t][1], x[t]) for t in range(len(x)) if x[t]]

    check: dict[tuple[Graph, ...], Fraction] = {}
    for gi, cof, coeff in cert:
        for mono, c in reduced[gi].terms.items():
            key = _attach_monomial(mono, cof)
            check[key] = check.get(key, Fraction(0)) + coeff * c
    rebuilt = GraphPolynomial(n, check, degree=k)
    if rebuilt != red_cand:
        raise AssertionError("membership certificate failed re-verification")
    return (True, cert)


def polynomial_to_json(p: GraphPolynomial) -> dict:
    return {
        "n": p.n,
        "terms": [
            {"coeff": str(coeff), "monomial": [graph_to_json(f) for f in mono]}
            for mono, coeff in p.terms.items()
        ],
    }


def polynomial_from_json(obj: dict) -> GraphPolynomial:
    n = int(obj["n"])
    terms: dict[tuple[Graph, ...], Fraction] = {}
    for entry in obj["terms"]:
        mono = tuple(graph_from_json(g) for g in entry["monomial"])
        for g in mono:
            if g.n != n:
                raise VertexCountMismatch(f"factor on {g.n} vertices in a polynomial on {n}")
        key = tuple(sorted((canonicalize(g).graph for g in mono), key=_factor_key))
        sign = 1
        for g in mono:
            sign *= canonicalize(g).sign
        terms[key] = terms.get(key, Fraction(0)) + sign * Fraction(entry["coeff"])
    return GraphPolynomial(n, terms)


def certificate_to_json(cert) -> list[dict]:
    return [
        {
            "generator_index": gi,
            "cofactor_monomial": [graph_to_json(f) for f in cof],
            "coeff": str(coeff),
        }
        for gi, cof, coeff in cert
    ]
