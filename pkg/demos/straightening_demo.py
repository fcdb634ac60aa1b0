"""Rewrite a product of crossing chords on the non-crossing basis and
check the answer by evaluating both sides at a configuration of points."""

from graphinv import Configuration, Graph, evaluate, evaluate_combination, straighten_graph


def show(g):
    return "".join(f"({t}-{h})" for t, h in g.edges)


star = Graph(6, [(1, 4), (2, 5), (3, 6)])
print(f"input graph: {show(star)}  (all three chords cross)")

comb = straighten_graph(star)
print("non-crossing expansion:")
for g, c in comb.terms.items():
    print(f"  {'+' if c > 0 else '-'}{abs(c)} {show(g)}")

c = Configuration.from_affine([0, 1, 3, 4, 7, 11])
lhs = evaluate(star, c)
rhs = evaluate_combination(comb, c)
print(f"evaluation at 0,1,3,4,7,11: input {lhs}, expansion {rhs}")
assert lhs == rhs

# a multigraph with repeated edges straightens the same way
double = Graph(4, [(1, 3), (1, 3), (2, 4), (2, 4)])
print(f"\ninput graph: {show(double)}")
for g, coeff in straighten_graph(double).terms.items():
    print(f"  {'+' if coeff > 0 else '-'}{abs(coeff)} {show(g)}")
