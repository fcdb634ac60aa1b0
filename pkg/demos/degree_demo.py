"""Degrees of the weighted moduli spaces, with one recursion trace."""

from graphinv import degree_trace, is_boundary, moduli_degree

rows = [
    (1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1,) * 10,
    (1,) * 12,
    (2, 2, 2, 2, 2),
    (3, 2, 1),
    (2, 2, 1, 1),
    (3, 1, 1, 1),
]
print("weights -> degree")
for w in rows:
    note = "  (boundary: only strictly semistable points)" if is_boundary(w) else ""
    print(f"  {w} -> {moduli_degree(w)}{note}")

print("\ndegrees for unit weights, n = 4, 6, 8, 10, 12:")
print([moduli_degree((1,) * n) for n in (4, 6, 8, 10, 12)])


def render(node, indent=0):
    pad = "  " * indent
    print(f"{pad}{tuple(node['weights'])}: {node['action']} -> {node['degree']}")
    if "child" in node:
        render(node["child"], indent + 1)
    for b in node.get("branches", []):
        extra = f" x{b['multiplicity']}" if b["multiplicity"] > 1 else ""
        print(f"{pad}  edge {tuple(b['pair'])}{extra}: contributes {b['contribution']}")
        if "child" in b:
            render(b["child"], indent + 2)


print("\nrecursion trace for (1,1,1,1,1,1):")
value, trace = degree_trace((1, 1, 1, 1, 1, 1))
render(trace)
assert value == 3
