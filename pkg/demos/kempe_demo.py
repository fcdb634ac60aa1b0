"""Decompose a regular graph into signed products of perfect matchings
and confirm the signed sum reproduces the original invariant."""

import math

from graphinv import Configuration, Graph, evaluate, kempe_decompose, lift_graph


def show(g):
    return "".join(f"({t}-{h})" for t, h in g.edges)


g = Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4), (2, 5), (3, 6)])
print(f"3-regular graph: {show(g)}")

products = kempe_decompose(g)
print(f"{len(products)} matching products:")
for p in products:
    sign = "+" if p.coeff > 0 else "-"
    print(f"  {sign}{abs(p.coeff)} " + " * ".join(show(f) for f in p.factors))

c = Configuration.from_affine([0, 1, 3, 4, 7, 11])
total = sum(p.coeff * math.prod(evaluate(f, c) for f in p.factors) for p in products)
direct = evaluate(g, c)
print(f"evaluation check at 0,1,3,4,7,11: direct {direct}, decomposed {total}")
assert total == direct

# weighted points unfold to repeated unweighted ones
small = Graph(3, [(1, 2), (1, 3)])
lifted, pi = lift_graph(small, (2, 1, 1))
print(f"\nlift of {show(small)} with weights (2,1,1): {show(lifted)}, projection {pi}")
