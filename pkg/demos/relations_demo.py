"""The cubic relation story: for six points there is a single cubic
relation, and it does not lie in the ideal of binomial quadrics (there
are none); for eight points it does."""

from graphinv import (
    ideal_membership,
    quadric_relation_space,
    reduce_to_noncrossing_vars,
    ring_normal_form,
    segre_cubic,
    simple_binomial_relations,
)


def show(g):
    return "".join(f"({t}-{h})" for t, h in g.edges)


s6 = segre_cubic(6)
print("the cubic relation on 6 points:")
for mono, c in s6.terms.items():
    print(f"  {'+' if c > 0 else '-'}{abs(c)} " + " * ".join(show(f) for f in mono))

print(f"\nring normal form is zero (it is a relation): {ring_normal_form(s6).is_zero}")
print(f"image in non-crossing variables is nonzero (not a linear consequence): "
      f"{not reduce_to_noncrossing_vars(s6).is_zero}")

print(f"\nbinomial quadrics on 6 points: {len(simple_binomial_relations(6))}")
print(f"quadric relation space on 6 points: dim {len(quadric_relation_space(6))}")
ok6, _ = ideal_membership(s6, simple_binomial_relations(6), 3)
print(f"cubic in the binomial ideal (n=6): {ok6}")

gens8 = simple_binomial_relations(8)
print(f"\nbinomial quadrics on 8 points: {len(gens8)}")
print(f"quadric relation space on 8 points: dim {len(quadric_relation_space(8))}")
ok8, cert = ideal_membership(segre_cubic(8), gens8, 3)
print(f"cubic in the binomial ideal (n=8): {ok8}, certificate with {len(cert)} terms")
used = sorted({gi for gi, _, _ in cert})
print(f"generators used: {len(used)} of {len(gens8)}")
